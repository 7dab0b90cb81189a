#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncgroup/constructors.hpp"
#include "ncgroup/group.hpp"
#include "ncgroup/permutation.hpp"

namespace fixture {

using namespace ncgroup;

inline GroupTable perm_group(std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* g : gens) ps.push_back(parse_cycles(g));
  return from_permutation_generators(ps);
}

inline GroupTable s3() { return perm_group({"(1 2)", "(1 2 3)"}); }
inline GroupTable a4() { return perm_group({"(1 2 3)", "(1 2)(3 4)"}); }
inline GroupTable s4() { return perm_group({"(1 2 3 4)", "(1 2)"}); }
inline GroupTable d8() { return perm_group({"(1 2 3 4)", "(1 3)"}); }

/// Element of a generator-built group by its cycle notation.
inline Element el(const GroupTable& g, const std::string& label) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

inline ElementSet set_of(const GroupTable& g, std::initializer_list<const char*> labels) {
  ElementSet s(g.order());
  for (const char* l : labels) s.insert(el(g, l));
  return s;
}

/// Every catalog group plus a few extra shapes, with a display name.
inline std::vector<std::pair<std::string, GroupTable>> assorted_groups() {
  std::vector<std::pair<std::string, GroupTable>> out;
  out.emplace_back("C1", cyclic(1));
  out.emplace_back("C12", cyclic(12));
  out.emplace_back("V4", elementary_abelian(2, 2));
  out.emplace_back("S3", s3());
  out.emplace_back("A4", a4());
  out.emplace_back("S4", s4());
  out.emplace_back("D8perm", d8());
  out.emplace_back("Q8", quaternion8());
  out.emplace_back("mna:2,1,3", minimal_nonabelian_pq(2, 1, 3));
  out.emplace_back("mna:3,1,2", minimal_nonabelian_pq(3, 1, 2));
  out.emplace_back("mna:2,2,3", minimal_nonabelian_pq(2, 2, 3));
  out.emplace_back("mna:3,1,7", minimal_nonabelian_pq(3, 1, 7));
  out.emplace_back("metacyclic:2,2,1", metacyclic_minimal_p_group(2, 2, 1));
  out.emplace_back("metacyclic:3,2,1", metacyclic_minimal_p_group(3, 2, 1));
  out.emplace_back("metacyclic:2,2,2", metacyclic_minimal_p_group(2, 2, 2));
  out.emplace_back("D12", dihedral(6));
  out.emplace_back("C2xS3", direct_product(cyclic(2), s3()));
  return out;
}

}  // namespace fixture
