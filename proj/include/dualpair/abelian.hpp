#pragma once

// Recognising a finite abelian group H from the table of a perfect pairing
// H x H* -> Q/Z, and the groups H_d = Z/d_1 + ... + Z/d_r with d_r | ... | d_1.

#include <cstdint>
#include <optional>
#include <vector>

#include "dualpair/field.hpp"
#include "dualpair/frac_cyclic.hpp"

namespace dp {

using ElemDivSeq = std::vector<std::int64_t>;
using HdElement = std::vector<std::int64_t>;

/// |H_d|.
std::int64_t group_order(const ElemDivSeq& d);
/// All elements of H_d in mixed-radix order, last coordinate fastest.
std::vector<HdElement> hd_elements(const ElemDivSeq& d);
/// sum x_i xi_i / d_i in Q/Z; throws SeqMismatch.
FracCyclic hd_pairing(const ElemDivSeq& d, const HdElement& x, const HdElement& xi);
std::string seq_str(const ElemDivSeq& d);

struct PairingTable {
  std::size_t n = 0;
  std::vector<std::vector<FracCyclic>> T;
};

struct GroupId {
  ElemDivSeq d;
  std::vector<HdElement> p;  // row index -> element of H_d
  std::vector<HdElement> q;  // column index -> element of H_d^* (same coordinates)
};

/// The recursive identification.  std::nullopt means "does not describe an
/// abelian group".  Throws MalformedTable on shape violations.  A result is
/// only returned after checking that it reproduces T entry for entry.
std::optional<GroupId> identify_group(const PairingTable& T);

/// T_ij = hd_pairing(p(i), q(j)) for independently shuffled enumerations.
PairingTable random_group_table(const ElemDivSeq& d, std::uint64_t seed);

json table_to_json(const PairingTable& T);
PairingTable table_from_json(const json& j);
json group_to_json(const GroupId& g);

}  // namespace dp
