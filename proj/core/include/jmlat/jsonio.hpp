#pragma once

#include <string>

#include "jmlat/decomposition.hpp"
#include "jmlat/joinmeet.hpp"
#include "jmlat/structure.hpp"

namespace jmlat {

/// {"elements": [...], "covers": [["lower","upper"], ...]}
std::string lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const std::string& text);
Lattice lattice_from_json_file(const std::string& path);

std::string order_to_json(const MonomialOrder& ord, const VariableSet& vars);

std::string radicality_to_json(const RadicalityCertificate& cert);
std::string decomposition_to_json(const DecompositionCertificate& cert);
std::string iso_to_json(const Theorem51Certificate& cert);
std::string gorenstein_to_json(const GorensteinReport& report, const Lattice& lat);
std::string search_to_json(const SearchReport& report, const VariableSet& vars);
std::string groebner_to_json(const GroebnerBasis& gb);
std::string props_to_json(const Lattice& lat);
std::string birkhoff_to_json(const Lattice& lat);

/// FNV-1a over the raw bytes, rendered as "fnv1a64:<hex>".
std::string digest_bytes(const std::string& bytes);

}  // namespace jmlat
