#pragma once

#include <optional>
#include <string>

#include "qpc/switching.hpp"

namespace qpc {

// QPC v1 interchange format, plain text, bit-exact round trips:
//
//   QPC v1
//   q=p^k[;mod=c0,c1,...]
//   m=<m>
//   kind=linear|switched
//
// linear continues with
//   dim=<k>
//   <k generator rows of space-separated element indices>
//
// switched continues with
//   i=<coordinate, 0-based>
//   <n - [m]_q - 1 R_i basis rows>
//   <[m]_q - m extension rows defining the representative order>
//   lambda=<T base-q digits, t ascending, alphanumeric 0-9a-z>
//
// Every row has exactly q^m entries in [0, q). Row counts for the switched
// kind are determined by q and m.
struct QpcFile {
    FieldPtr field;
    unsigned m = 0;
    enum class Kind { Linear, Switched } kind = Kind::Linear;

    std::optional<FqMatrix> generator;  // linear

    std::size_t coord = 0;  // switched
    std::optional<FqMatrix> ri_basis;
    std::optional<FqMatrix> extension;
    std::vector<Elem> lambdas;
};

std::string serialize_linear(const LinearCode& code, unsigned m);
std::string serialize_switched(const SwitchedCode& sw);

// Parses and validates shape only (counts, ranges); throws ParseError.
QpcFile parse_qpc(const std::string& text);

// Semantic validation and reconstruction. realize_switched checks that the
// stored basis is exactly the canonical R_i basis for the stored coordinate
// and that the extension rows really extend it to the whole code.
LinearCode realize_linear(const QpcFile& file);
SwitchedCode realize_switched(const QpcFile& file);

// True iff the file's generator spans RM_q((q-1)m-2, m) exactly.
bool is_target_code(const QpcFile& file);

char lambda_digit_char(Elem v);
Elem lambda_digit_value(char c, unsigned q);

}  // namespace qpc
