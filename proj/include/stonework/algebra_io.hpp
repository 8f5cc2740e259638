#pragma once

#include <string>

#include "stonework/algebra.hpp"

namespace stonework {

/// Parses an algebra document. Two forms are accepted:
///   {"type":"powerset","ground":["a","b","c"]}
///   {"type":"table","elements":[...],"zero":...,"one":...,
///    "join":[[...]],"meet":[[...]],"not":[...]}
/// Table entries are element names, row-major. Totality and in-carrier
/// closure are validated before the algebra is handed out; a powerset form
/// is materialized on the spot (subject to the carrier cap).
FiniteAlgebra parse_algebra(const std::string& text,
                            std::size_t carrier_cap = kDefaultCarrierCap);

FiniteAlgebra load_algebra_file(const std::string& path,
                                std::size_t carrier_cap = kDefaultCarrierCap);

/// Serializes to the table form. Loading the result back yields an equal
/// algebra (same names, tables and distinguished elements).
std::string algebra_to_table_document(const FiniteAlgebra& algebra);

std::string powerset_to_document(const PowerSetAlgebra& algebra);

}  // namespace stonework
