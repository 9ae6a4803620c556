#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "keycrystal/affine_a.hpp"
#include "keycrystal/weyl.hpp"

namespace kc::binf {

using affine::Charge;
using affine::Multipartition;

struct Segment {
  int a;
  int b;
  int length() const { return b - a + 1; }
  bool operator==(const Segment&) const = default;
  // Canonical order: right end first, then left end.
  std::strong_ordering operator<=>(const Segment& o) const {
    if (auto c = b <=> o.b; c != 0) return c;
    return a <=> o.a;
  }
};

// Kept sorted in canonical order.
using Multisegment = std::vector<Segment>;
using Sequences = std::vector<std::vector<Segment>>;

Multisegment canonical(Multisegment m);
std::string str(const Segment& s);
std::string str(const Multisegment& m);
std::string str(const Sequences& L);
// "[a;b]+[a;b]+..." or "0" for the empty multisegment; "[a]" is accepted for [a;a].
Multisegment parse(std::string_view text);

bool is_aperiodic(const Multisegment& m, int e);
// Every segment inside [1, e-1].
bool in_finite_class(const Multisegment& m, int e);

Multisegment pi_embed(const Multipartition& p, const Charge& s);
// Every multipartition p with pi_embed(p, s) == m.
std::vector<Multipartition> pi_inverse(const Multisegment& m, const Charge& s);

struct Construction {
  bool completed = false;
  std::string stop_reason;
  std::vector<Sequences> stages;  // one per group of equal right ends, largest first
  Sequences L;
};
// Builds the sequences L_1..L_l by prepending segments grouped by right end.
Construction build_sequences(const Multisegment& m, int l);
// Partition read from one sequence and the left end of its top row.
Multipartition sequences_to_multipartition(const Sequences& L);

struct OrbitResult {
  bool accepted = false;
  Multipartition lambda;
  Charge charge;   // pi_embed(lambda, charge) == m
  int shift = 0;   // charge = s + shift
  bool exact = false;  // found at the requested charge
  bool sequence_charge_test = false;  // s_i - s_j = p_i - p_j
  Construction construction;
  std::string reason;
};

// e = affine::kInfinity for sl_infinity.
OrbitResult orbit_membership(const Multisegment& m, int e, const Charge& s);
OrbitResult orbit_membership_any_charge(const Multisegment& m, int e, int l);

// Restricted mode: m must be pi_embed of a vertex of B(Lambda_s). For e = infinity the
// word letters are integer colours.
bool binfty_demazure_membership(const Multisegment& m, const WeylWord& w, const Charge& s, int e);

}  // namespace kc::binf
