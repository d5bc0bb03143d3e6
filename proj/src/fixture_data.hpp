#pragma once

namespace foldlab::detail {

struct RawFixture {
  const char* id;
  int coverage;
  const char* text;
};

// Embedded fixture corpus; mirrors the files under data/fixtures/.
const RawFixture* raw_fixtures(int* count);

}  // namespace foldlab::detail
