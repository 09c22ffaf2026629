#ifndef AMTK_GF2_HPP
#define AMTK_GF2_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amtk/bitvec.hpp"
#include "amtk/enumerators.hpp"
#include "amtk/exact.hpp"

namespace amtk {

// Binary linear code stored as a canonical reduced row-echelon generator
// matrix (pivot columns strictly increasing), so equal codes compare equal.
struct BinaryCode {
    uint32_t n = 0;
    uint32_t k = 0;
    std::vector<BitVec> generators;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;
};

struct ParseResult {
    BinaryCode code;
    bool dropped_dependent_rows = false;
};

// d and d_dual use the sentinel n+1 when the respective code is {0}.
struct CodeProfile {
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t d = 0;
    uint32_t d_dual = 0;
    bool has_all_ones = false;
    std::vector<uint32_t> weights;  // nonzero weights of C, ascending
};

struct EnumerationLimits {
    uint32_t max_dim = 28;  // refuse to enumerate more than 2^max_dim words
    unsigned threads = 1;
};

/// Canonicalizes arbitrary spanning rows into a BinaryCode. Dependent rows
/// are silently dropped; use parse_generator_matrix to detect them.
BinaryCode make_code(uint32_t n, const std::vector<BitVec>& rows);

/// Text format: one row per line of '0'/'1' characters, all the same length;
/// blanks between digits are ignored; '#' starts a comment line.
ParseResult parse_generator_matrix(std::string_view text);

/// Inverse of parse_generator_matrix on canonical codes.
std::string to_text(const BinaryCode& c);

/// Named test-corpus codes: hamming_7_4, ext_hamming_8_4, golay_23_12,
/// ext_golay_24_12, rm(r,m), repetition_n, even_weight_n.
BinaryCode catalog_code(const std::string& name);
std::vector<std::string> catalog_names();

BinaryCode dual_code(const BinaryCode& c);

bool contains_all_ones(const BinaryCode& c);

/// A_i = #{codewords of weight i}, by full enumeration of the 2^k words.
WeightEnumerator weight_distribution(const BinaryCode& c, const EnumerationLimits& lim = {});

CodeProfile code_profile(const BinaryCode& c, const EnumerationLimits& lim = {});

/// All codewords of weight w, each exactly once, sorted lexicographically
/// by bit-string.
std::vector<BitVec> codewords_of_weight(const BinaryCode& c, uint32_t w,
                                        const EnumerationLimits& lim = {});

}  // namespace amtk

#endif
