#pragma once

// Raw text of the embedded data files and their SHA-256 digests.

namespace nilnf::dataset {

extern const char* const kOrbitsTsv;
extern const char* const kOrbitsSha256;
extern const char* const kIrreducibleTsv;
extern const char* const kIrreducibleSha256;

}  // namespace nilnf::dataset
