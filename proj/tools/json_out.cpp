#include "json_out.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace holopois::cli {

json to_json(const Poly& p) { return to_string(p); }
json to_json(const Polyvector& a) { return to_string(a); }

json to_json(const Count& c) {
  if (c.is_infinite()) return "INFINITE";
  return c.value();
}

json to_json(const GroebnerBasis& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return {{"order", g.order().name()}, {"generators", gens}};
}

json to_json(const ZeroLeafLocus& z) {
  return {{"ideal", to_json(z.basis)}, {"dimension", z.dimension}};
}

json to_json(const SurfaceLeafReport& r) {
  return {{"f", to_json(r.f)},
          {"open_leaf", r.open_leaf},
          {"singular_ideal", to_json(r.singular_ideal)},
          {"singular_dimension", r.singular_dimension},
          {"tjurina_total", to_json(r.tjurina_total)},
          {"contains_multiple_components", r.contains_multiple_components}};
}

json to_json(const SurfaceH2Report& r) {
  json out{{"f", to_json(r.f)},
           {"tjurina_total", to_json(r.tjurina_total)},
           {"formula", r.formula},
           {"quasi_homogeneous_checked", r.quasi_homogeneous_checked},
           {"assumptions", r.assumptions},
           {"betti_U", nullptr},
           {"h2", nullptr}};
  if (r.betti_U) out["betti_U"] = *r.betti_U;
  if (r.h2) out["h2"] = *r.h2;
  return out;
}

json to_json(const CohomologyTable& t) {
  json entries = json::array(), euler = json::array();
  for (const auto& e : t.entries)
    entries.push_back({{"k", e.k},
                       {"w", e.w},
                       {"dim_chain", e.dim_chain},
                       {"dim_kernel", e.dim_kernel},
                       {"dim_image_incoming", e.dim_image_incoming},
                       {"dim_H", e.dim_H},
                       {"rank_outgoing", e.rank_outgoing}});
  for (const auto& e : t.euler)
    euler.push_back({{"strand", e.strand}, {"k_top", e.k_top}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds()}});
  return {{"m", t.m},           {"k_max", t.k_max},  {"w_min", t.w_min},
          {"w_max", t.w_max},   {"entries", entries}, {"euler", euler},
          {"euler_consistent", t.euler_consistent()}};
}

json structure_json(const StructureDefinition& def) {
  json brackets = json::array();
  for (const auto& [idx, coef] : def.bivector.terms())
    brackets.push_back({{"pair", {def.chart->name(idx[0]), def.chart->name(idx[1])}}, {"value", to_json(coef)}});
  return {{"variables", def.chart->names()},
          {"weights", def.chart->weights()},
          {"bivector", to_json(def.bivector)},
          {"brackets", brackets}};
}

json conventions() {
  return {{"schouten", "[P,Q] = sum_i (P right-d/dtheta_i)(d/dx_i Q) - (-1)^((p-1)(q-1)) (Q right-d/dtheta_i)(d/dx_i P)"},
          {"bv", "bv = sum_i d/dx_i left-d/dtheta_i"},
          {"bracket", "{f,g} = sum_{i<j} pi^{ij} (f_i g_j - f_j g_i)"},
          {"hamiltonian", "H_f = iota_{df} pi, H_f(g) = {f,g}"},
          {"lichnerowicz", "d_pi = [pi, -], d_pi f = -H_f"},
          {"modular", "zeta = bv(pi)"},
          {"pfaffian", "pi^(n/2) / (n/2)! = pf * d_1^...^d_n"}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace holopois::cli
