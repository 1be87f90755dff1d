#ifndef HLAWKA_RELATION_HPP
#define HLAWKA_RELATION_HPP

#include <span>
#include <vector>

#include "hlawka/scalar.hpp"

namespace hlawka::relation {

/**
Linear signature-preserving functional on a finite index set, i.e. a
nonnegative weighted sum. T(1) is cached at construction.
*/
class WeightedFunctional {
public:
    explicit WeightedFunctional(std::vector<Scalar> weights);

    std::size_t size() const { return weights_.size(); }
    const std::vector<Scalar>& weights() const { return weights_; }
    const Scalar& total() const { return total_; }

    /// T(v) = sum_w weight_w * v_w.
    Scalar apply(std::span<const Scalar> v) const;

private:
    std::vector<Scalar> weights_;
    Scalar total_;
};

/// Free-function spelling of WeightedFunctional::apply.
Scalar t_apply(const WeightedFunctional& functional, std::span<const Scalar> v);

/**
One instance of the signature relation: a functional over a finite index
set, the two evaluated image vectors, and the two control constants.
Construction enforces a != 0 and a + b > 0; callers that need the
degenerate cases resolve them before building an instance.
*/
struct HlawkaInstance {
    WeightedFunctional functional;
    std::vector<Scalar> f_eta;
    std::vector<Scalar> f_xi;
    Scalar a;
    Scalar b;

    HlawkaInstance(WeightedFunctional functional_, std::vector<Scalar> f_eta_,
                   std::vector<Scalar> f_xi_, Scalar a_, Scalar b_);
};

enum class SumMode { LeqA, GeqA, Neither };

const char* to_string(SumMode m);

struct Forms {
    Scalar scale;     // c = (2/a) T(f_eta)
    Scalar one_form;  // C1 = (T(1)-c) b   + T(f_eta)   - T(f_xi)
    Scalar two_form;  // C2 = (T(1)-c) b^2 + T(f_eta^2) - T(f_xi^2)
};

Forms compute_forms(const HlawkaInstance& inst);

/**
Residual of the product identity
  T((a - f_eta - f_xi)(f_eta + b - f_xi)) = C1 (a+b) - C2.
Zero bit-exactly on all-rational instances; tolerance-small on doubles.
*/
Scalar identity_residual(const HlawkaInstance& inst);

struct Controls {
    SumMode sum_mode;
    bool diff_ok;
};

/**
Pointwise summation/difference controls. With active_only the quantifier
runs over the active set { w : b + f_eta(w) - f_xi(w) != 0 } instead of
the whole index set.
*/
Controls check_controls(const HlawkaInstance& inst, bool active_only);

enum class ImplicationKind {
    TwoFormNonnegImpliesOneFormNonneg, // fires under LeqA
    OneFormNonposImpliesTwoFormNonpos, // fires under LeqA
    OneFormNonnegImpliesTwoFormNonneg, // fires under GeqA
    TwoFormNonposImpliesOneFormNonpos, // fires under GeqA
};

const char* to_string(ImplicationKind k);

struct FiredImplication {
    ImplicationKind kind;
    Verdict premise;
    Verdict conclusion;
};

struct RelationReport {
    Scalar scale;
    Scalar one_form;
    Scalar two_form;
    SumMode sum_mode = SumMode::Neither;
    bool diff_ok = false;
    Scalar residual;
    std::vector<FiredImplication> fired;
    bool controls_met = false;
    // True when a premise held beyond tolerance and its conclusion failed
    // beyond tolerance. Must never happen on a valid instance.
    bool falsified = false;
};

/**
Full evaluation of one instance: forms, controls, identity residual, and
every implication whose premise is not refuted. A premise fires when its
verdict is Holds or Marginal; only Holds-premise/Fails-conclusion pairs
count as falsifications.
*/
RelationReport adjudicate(const HlawkaInstance& inst, bool active_only,
                          const TolerancePolicy& policy = {});

} // namespace hlawka::relation

#endif
