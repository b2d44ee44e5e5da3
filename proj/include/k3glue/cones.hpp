// Ample and free certificates on the K3 models.
//
// Ampleness on the Wehler model is the strict interior of the positive cone
// (D^2 > 0, D.H > 0), valid because the lattice carries a no-(-2)-curve
// certificate. Ampleness of l - kf on the quartic model pairs the symbolic
// inequality chain (A)/(C)/(D) with an independent bounded enumeration of
// (-2)-classes; the certificate requires both.

#pragma once

#include <functional>
#include <optional>

#include "k3glue/oguiso.hpp"
#include "k3glue/wehler.hpp"

namespace k3glue {

enum class CheckKind { positive, nonnegative, zero };

struct CertCheck {
  std::string description;
  Int value;
  CheckKind kind = CheckKind::positive;
  bool satisfied = false;
};

bool evaluate_check(CheckKind kind, const Int& value);

enum class CertMethod { wehler_positive_cone, oguiso_inequalities, free_sum_decomposition };

const char* to_string(CertMethod m);

struct AmpleCertificate {
  DivisorClass cls;
  CertMethod method = CertMethod::wehler_positive_cone;
  std::vector<CertCheck> checks;
  bool positive = false;

  // The stored flags must agree with re-evaluating the stored values.
  bool consistent() const;

  bool operator==(const AmpleCertificate& o) const;
};

AmpleCertificate wehler_is_ample(const WehlerModel& model, const DivisorClass& d);

// Mod-4 argument plus exhaustive box enumeration: no class of square -2
// exists on the Wehler lattice.
struct MinusTwoCertificate {
  int bound = 0;            // enumeration over |coords| <= bound
  bool mod4_diagonal_ok = false;
  bool mod4_offdiag_even = false;
  Int classes_searched = 0;
  Int classes_found = 0;    // classes with square -2 (must be 0)
  bool certified = false;
};

MinusTwoCertificate wehler_no_minus_two_certificate(const WehlerModel& model, int bound = 10);

// All (-2)-classes d = x f + y e + z v with x y = 10 z^2 - 1, y >= 0 and
// |z| <= z_bound, enumerated by divisor factorization of 10 z^2 - 1 and
// sorted by (z, x, y).
std::vector<DivisorClass> oguiso_minus_two_classes(const OguisoModel& model, const Int& z_bound);

// Certificate for l(a) - k f: conditions (A), (C), (D) evaluated exactly,
// plus the enumeration check l'.d > 0 over the bounded (-2)-class list.
AmpleCertificate oguiso_ample_certificate(const OguisoModel& model, const Int& a, const Int& k,
                                          const Int& z_bound);

enum class FreeRule { no_p1_on_surface, ample_multiple_plus_free_fiber, undetermined };

const char* to_string(FreeRule r);

// D = multiple * ample_part + fiber_multiple * fiber_class with
// multiple >= 2 and fiber_multiple >= 0; the ampleness sub-certificate for
// ample_part is supplied by the caller.
struct FreeDecomposition {
  Int multiple;
  DivisorClass ample_part;
  AmpleCertificate ample_cert;
  Int fiber_multiple;
  DivisorClass fiber_class;
};

struct FreeCertificate {
  DivisorClass cls;
  FreeRule rule = FreeRule::undetermined;
  bool free = false;  // false only means the certificate does not apply
  std::vector<CertCheck> checks;
  std::optional<AmpleCertificate> ample_subcert;
  std::string note;

  bool consistent() const;
};

// Certificate inputs a K3 model provides: the no-(-2)-curve certificate when
// it has one, an ampleness test, and the elliptic fiber classes whose linear
// systems are free pencils (a structural geometric input).
struct K3CertContext {
  LatticePtr lattice;
  std::optional<MinusTwoCertificate> no_minus_two;
  std::function<AmpleCertificate(const DivisorClass&)> ample_test;
  std::vector<DivisorClass> free_fiber_classes;
};

K3CertContext wehler_context(const WehlerModel& model, int minus_two_bound = 10);
K3CertContext oguiso_context(const OguisoModel& model);

// Rule "no P1 on S": an ample class on a K3 without (-2)-curves is free.
// Rule "ample multiple plus fiber": |mA + nF| is free for m >= 2, n >= 0,
// A ample, F a free fiber class. Returns rule undetermined when neither
// applies; that refutes nothing.
FreeCertificate free_system_certificate(const K3CertContext& ctx, const DivisorClass& d,
                                        const std::optional<FreeDecomposition>& dec = std::nullopt);

}  // namespace k3glue
