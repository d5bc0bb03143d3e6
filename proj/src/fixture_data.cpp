#include "fixture_data.hpp"

namespace foldlab::detail {

const RawFixture* raw_fixtures(int* count) {
  static const RawFixture k[] = {
      {"fig2", 5, R"FIX(poly 3 3
hole square 1 1
faces:
2 3 6
2 . 4
1 3 4
)FIX"},
      {"fig3", 6, R"FIX(poly 4 5
hole slit2 v 1 2
hole slit2 v 3 2
hole slit2 v 2 1
faces:
1 1 5 5
6 1 5 6
4 2 2 3
2 2 2 2
1 1 5 5
)FIX"},
      {"fig5a", 6, R"FIX(poly 4 7
hole slit2 v 1 1
hole slit2 v 1 4
faces:
1 3 4 5
6 3 4 5
6 3 4 5
1 3 4 5
2 3 4 5
2 3 4 5
1 3 4 5
layers:
0 0 0 0
0 1 1 1
1 2 2 2
1 3 3 3
0 4 4 4
1 5 5 5
2 6 6 6
)FIX"},
      {"fig5b", 6, R"FIX(poly 5 7
hole slit2 v 2 1
hole slit2 v 1 4
faces:
1 1 5 4 3
6 1 5 4 3
6 1 5 4 3
1 1 5 4 3
2 2 5 4 3
2 2 5 4 3
1 1 5 4 3
layers:
0 1 0 0 0
0 2 1 1 1
1 3 2 2 2
5 4 3 3 3
1 0 4 4 4
2 3 5 5 5
6 7 6 6 6
)FIX"},
      {"fig5c", 6, R"FIX(poly 4 7
hole slit2 v 3 1
hole slit2 v 1 4
faces:
1 3 4 5
6 3 4 5
6 3 4 5
1 3 4 5
1 3 4 2
1 3 4 2
1 3 4 5
layers:
0 0 0 0
0 1 1 1
1 2 2 2
1 3 3 3
2 4 4 0
3 5 5 1
4 6 6 4
)FIX"},
      {"fig5d", 6, R"FIX(poly 5 7
hole slit2 v 4 1
hole slit2 v 1 4
faces:
1 1 5 4 3
6 1 5 4 3
6 1 5 4 3
1 1 5 4 3
1 1 5 4 2
1 1 5 4 2
1 1 5 4 3
layers:
0 1 0 0 0
0 2 1 1 1
1 3 2 2 2
5 4 3 3 3
6 7 4 4 0
9 8 5 5 1
10 11 6 6 4
)FIX"},
      {"fig5e", 6, R"FIX(poly 5 5
hole slit2 v 2 1
hole slit2 v 1 2
faces:
1 1 5 4 3
6 1 5 4 3
4 2 5 4 3
2 2 5 4 3
1 1 5 4 3
layers:
0 1 0 0 0
0 2 1 1 1
5 0 2 2 2
2 1 3 3 3
4 3 4 4 4
)FIX"},
      {"fig5f", 6, R"FIX(poly 4 5
hole slit2 v 3 1
hole slit2 v 1 2
faces:
1 3 4 5
6 3 4 5
6 3 4 2
1 3 4 2
1 3 4 5
layers:
0 0 0 0
0 1 1 1
1 2 2 0
1 3 3 1
2 4 4 2
)FIX"},
      {"fig5g", 6, R"FIX(poly 5 5
hole slit2 v 4 1
hole slit2 v 1 2
faces:
1 1 5 4 3
6 1 5 4 3
6 1 5 4 2
1 1 5 4 2
1 1 5 4 3
layers:
0 1 0 0 0
0 2 1 1 1
1 3 2 2 0
5 4 3 3 1
6 7 4 4 2
)FIX"},
      {"fig6a", 6, R"FIX(poly 4 8
hole slit2 h 1 1
hole slit2 v 2 2
hole slit2 v 2 5
faces:
1 1 5 5
2 2 5 5
2 2 5 5
1 1 5 5
1 1 6 6
1 1 6 6
1 1 5 5
1 3 4 5
layers:
5 4 4 5
2 1 3 6
3 0 2 7
6 3 1 8
7 2 1 2
8 1 0 3
9 0 0 9
10 0 0 10
)FIX"},
      {"fig6b", 6, R"FIX(poly 4 9
hole slit2 h 1 1
hole slit2 v 2 3
hole slit2 v 2 6
faces:
1 1 5 5
6 6 5 5
6 6 5 5
1 1 5 5
1 1 2 2
1 1 2 2
1 1 5 5
1 1 5 5
1 3 4 5
layers:
6 5 5 6
1 2 4 7
0 3 3 8
7 4 2 9
8 3 1 2
9 2 0 3
10 1 1 10
11 0 0 11
12 0 0 12
)FIX"},
      {"fig6c", 6, R"FIX(poly 4 9
hole slit2 v 2 1
hole slit2 h 1 5
hole slit2 v 2 6
faces:
1 3 4 4
1 3 6 6
1 3 6 6
1 3 4 4
1 1 5 4
1 1 5 4
2 2 5 4
2 2 5 4
1 1 5 4
)FIX"},
      {"fig6d", 6, R"FIX(poly 4 6
hole slit2 h 1 1
hole slit2 v 2 2
hole slit2 v 1 3
faces:
1 1 5 5
2 1 5 5
2 1 6 6
1 1 6 6
1 1 5 5
1 3 4 5
layers:
0 1 0 1
0 2 3 2
1 3 1 0
5 4 2 3
7 8 4 5
6 0 0 6
)FIX"},
      {"fig6e", 6, R"FIX(poly 4 6
hole slit2 h 1 1
hole slit2 v 1 2
hole slit2 v 2 3
faces:
1 1 5 5
1 1 2 2
6 1 2 2
6 1 5 5
1 1 5 5
1 3 4 5
layers:
1 0 0 1
2 3 0 1
0 4 3 2
1 5 3 2
7 6 4 5
8 0 0 6
)FIX"},
      {"fig6f", 6, R"FIX(poly 4 7
hole slit2 h 1 1
hole slit2 v 2 3
hole slit2 v 1 4
faces:
1 1 5 5
6 1 5 5
6 1 2 2
1 1 2 2
1 1 5 5
1 1 5 5
1 3 4 5
layers:
0 1 0 1
0 2 3 2
1 3 1 0
5 4 2 3
6 7 4 5
9 8 8 7
10 0 0 6
)FIX"},
      {"fig6g", 6, R"FIX(poly 4 7
hole slit2 h 1 1
hole slit2 v 2 4
hole slit2 v 1 3
faces:
1 1 5 5
1 1 6 6
2 1 6 6
2 1 5 5
1 1 5 5
1 1 5 5
1 3 4 5
layers:
6 5 3 4
7 4 1 2
0 3 0 3
1 2 2 5
8 1 1 6
9 0 0 7
10 0 0 8
)FIX"},
      {"fig6h", 6, R"FIX(poly 4 8
hole slit2 h 1 1
hole slit2 v 1 2
hole slit2 v 2 5
faces:
1 1 5 5
1 1 2 2
1 1 2 2
1 1 5 5
6 1 5 5
6 1 5 5
1 1 5 5
1 3 4 5
layers:
7 6 4 5
8 5 1 2
9 4 0 3
10 3 3 7
0 2 2 8
1 1 1 9
11 0 0 10
12 0 0 6
)FIX"},
      {"fig6i", 6, R"FIX(poly 4 8
hole slit2 h 1 1
hole slit2 v 2 2
hole slit2 v 1 5
faces:
1 1 5 5
2 1 5 5
2 1 5 5
1 1 5 5
1 1 6 6
1 1 6 6
1 1 5 5
1 3 4 5
layers:
7 6 4 5
0 5 3 6
1 4 2 7
8 3 1 8
9 2 1 2
10 1 0 3
11 0 0 9
12 0 0 10
)FIX"},
      {"fig6j", 6, R"FIX(poly 4 9
hole slit2 h 1 1
hole slit2 v 2 3
hole slit2 v 1 6
faces:
1 1 5 5
6 1 5 5
6 1 5 5
1 1 5 5
1 1 2 2
1 1 2 2
1 1 5 5
1 1 5 5
1 3 4 5
layers:
8 7 5 6
0 6 4 7
1 5 3 8
9 4 2 9
10 3 1 2
11 2 0 3
12 1 1 10
13 0 0 11
14 0 0 12
)FIX"},
      {"fig6k", 6, R"FIX(poly 4 9
hole slit2 h 1 1
hole slit2 v 1 3
hole slit2 v 2 6
faces:
1 1 5 5
1 1 6 6
1 1 6 6
1 1 5 5
2 1 5 5
2 1 5 5
1 1 5 5
1 1 5 5
1 3 4 5
layers:
8 7 5 6
9 6 1 2
10 5 0 3
11 4 4 7
0 3 3 8
1 2 2 9
12 1 1 10
13 0 0 11
14 0 0 12
)FIX"},
      {"fig6l", 6, R"FIX(poly 4 9
hole slit2 h 1 5
hole slit2 v 1 1
hole slit2 v 2 6
faces:
1 1 5 5
1 1 6 6
1 1 6 6
1 1 5 5
1 3 4 5
1 3 4 5
2 3 4 5
2 3 4 5
1 3 4 5
layers:
4 3 1 2
5 2 1 2
6 1 0 3
7 0 0 3
8 0 0 4
9 1 1 5
0 2 2 6
1 3 3 7
10 4 4 8
)FIX"},
      {"fig6m", 6, R"FIX(poly 4 9
hole slit2 h 1 5
hole slit2 v 2 1
hole slit2 v 1 6
faces:
1 3 4 5
6 3 4 5
6 3 4 5
1 3 4 5
1 1 5 5
1 1 5 5
1 1 2 2
1 1 2 2
1 1 5 5
layers:
11 3 3 9
1 2 2 8
0 1 1 7
10 0 0 6
9 0 0 5
8 1 1 4
7 2 0 3
6 3 1 2
5 4 2 3
)FIX"},
      {"fig7a", 6, R"FIX(poly 4 5
hole slit2 v 1 2
hole slit2 v 3 2
hole slit2 v 2 1
faces:
1 1 5 5
6 1 5 6
4 2 2 3
2 2 2 2
1 1 5 5
layers:
0 1 0 4
0 4 2 1
0 2 4 0
0 1 3 5
2 3 1 3
)FIX"},
      {"fig7b", 6, R"FIX(poly 4 6
hole slit2 v 1 3
hole slit2 v 3 1
hole slit2 v 2 2
faces:
1 1 5 5
2 1 5 5
4 6 6 6
6 6 6 3
1 1 5 2
1 1 5 5
layers:
0 1 0 1
0 2 3 2
0 0 4 3
2 1 5 0
4 3 4 1
5 6 5 6
)FIX"},
      {"fig7c", 6, R"FIX(poly 4 8
hole slit2 v 2 1
hole slit2 v 3 2
hole slit2 v 1 4
hole slit2 v 2 5
faces:
1 1 5 5
2 2 5 5
4 2 5 5
6 1 5 5
1 1 5 6
2 2 2 3
2 2 2 2
1 1 5 5
)FIX"},
      {"fig7d", 6, R"FIX(poly 4 9
hole slit2 v 3 1
hole slit2 v 2 2
hole slit2 v 1 5
hole slit2 v 2 6
faces:
1 1 5 5
6 6 5 5
4 6 5 5
2 1 5 5
1 1 5 5
1 1 6 6
1 1 6 3
1 1 5 2
1 1 5 5
)FIX"},
      {"fig7e", 6, R"FIX(poly 4 10
hole slit2 v 3 1
hole slit2 v 2 2
hole slit2 v 1 7
hole slit2 v 2 6
faces:
1 1 5 5
2 1 5 5
4 6 6 6
6 6 6 6
1 1 5 5
1 1 5 5
1 1 6 6
1 1 6 3
1 1 5 2
1 1 5 5
layers:
0 3 6 3
1 4 7 2
0 9 4 1
7 8 3 2
1 2 5 4
6 5 8 1
13 14 5 0
12 11 6 0
9 10 10 0
8 7 9 0
)FIX"},
      {"fig7f", 6, R"FIX(poly 4 10
hole slit2 v 2 1
hole slit2 v 3 2
hole slit2 v 1 6
hole slit2 v 2 7
faces:
1 1 5 5
2 2 2 2
4 2 2 2
6 1 5 5
1 1 5 5
1 1 5 5
1 1 5 6
1 1 2 3
1 1 2 2
1 1 5 5
)FIX"},
      {"fig8", 0, R"FIX(poly 5 8
hole slit2 v 2 1
hole slit2 v 3 4
hole slit2 v 2 5
)FIX"},
      {"fig9", 6, R"FIX(poly 10 4
hole square 1 2
hole square 8 2
hole slit2 h 2 1
hole slit2 h 4 2
hole slit2 h 6 1
faces:
1 3 3 3 3 3 3 3 3 1
6 . 6 6 6 6 6 6 . 6
4 4 5 5 4 4 5 5 4 4
2 2 2 2 2 2 2 2 2 2
layers:
0 0 1 2 3 4 5 6 7 1
0 . 1 2 3 4 5 6 . 7
0 1 0 1 2 3 2 3 4 5
0 1 2 3 4 5 6 7 8 9
)FIX"},
  };
  *count = int(sizeof(k) / sizeof(k[0]));
  return k;
}

}  // namespace foldlab::detail
