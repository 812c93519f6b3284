#pragma once

#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "macref/partition.hpp"
#include "macref/ratfunc.hpp"

namespace macref {

enum class Basis { monomial, elementary, homogeneous, powersum, schur };

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Element of the ring of symmetric functions over ℚ(q,t,u,v): a finite map
// from partitions to coefficients, tagged with the basis the partitions
// index. Conversions between the five classical bases are exact and cached
// per degree.
class SymFunc {
public:
    SymFunc() : basis_(Basis::powersum) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b = Basis::powersum) { return SymFunc(b); }
    static SymFunc one(Basis b = Basis::powersum) {
        return basis_element(b, Partition::empty());
    }
    static SymFunc basis_element(Basis b, const Partition& p, RatFunc c = RatFunc::one());

    Basis basis() const { return basis_; }
    const std::map<Partition, RatFunc>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    SymFunc degree_part(int d) const;

    RatFunc coefficient(const Partition& p) const;
    void set_coefficient(const Partition& p, RatFunc c);

    SymFunc converted(Basis target) const;

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    SymFunc scaled(const RatFunc& c) const;
    SymFunc map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string to_string() const;

private:
    Basis basis_;
    std::map<Partition, RatFunc> terms_;
};

// convenient constructors
SymFunc sym_p(const Partition& p);
SymFunc sym_p(long k);
SymFunc sym_s(const Partition& p);
SymFunc sym_m(const Partition& p);
SymFunc sym_e(long k);
SymFunc sym_h(long k);

Rat z_lambda(const Partition& p);

// symmetric group character χ^λ_μ via Murnaghan–Nakayama
long mn_character(const Partition& lam, const Partition& mu);

// ---- plethysm ----

// A virtual alphabet, given by its Adams images k ↦ p_k[A]. Values are
// scalars (elements of ℚ(q,t,u,v)) or symmetric functions.
using SymVal = std::variant<RatFunc, SymFunc>;

struct PlethAlphabet {
    std::function<SymVal(long)> adams;
};

PlethAlphabet alphabet_x();                                   // genuine X
PlethAlphabet alphabet_scalar(std::function<RatFunc(long)>);  // scalar-valued
PlethAlphabet alphabet_of(const RatFunc& r);                  // k ↦ ψ_k(r)
PlethAlphabet alphabet_x_times(const RatFunc& g);             // g·X
PlethAlphabet alphabet_minus_eps_x();                         // −εX (gives ω)
PlethAlphabet alphabet_sum(const PlethAlphabet& a, const PlethAlphabet& b);
PlethAlphabet alphabet_negate(const PlethAlphabet& a);

SymVal sym_val_add(const SymVal& a, const SymVal& b);
SymVal sym_val_mul(const SymVal& a, const SymVal& b);

SymVal plethysm(const SymFunc& f, const PlethAlphabet& A);
RatFunc plethysm_scalar(const SymFunc& f, const PlethAlphabet& A);
SymFunc plethysm_sym(const SymFunc& f, const PlethAlphabet& A);

// f[g·X] for a scalar rational function g — the common plethystic reindexing
SymFunc plethysm_scale_x(const SymFunc& f, const RatFunc& g);

// ---- involutions and inner products ----

SymFunc omega(const SymFunc& f);
SymFunc omega_qt(const SymFunc& f);

enum class InnerKind { hall, qt, star };

RatFunc inner_product(const SymFunc& f, const SymFunc& g, InnerKind kind);

// ---- Ω series ----

// Σ_{k ≤ D} h_k[A] (or Σ e_k[A] for the ω-twisted variant)
SymVal omega_series(const PlethAlphabet& A, int D, bool tilde = false);

// Ω[A] for a scalar alphabet whose degree-1 Adams image is a Laurent
// polynomial with integer coefficients: ∏ over monomials M of (1−M)^{−c}.
RatFunc omega_closed(const Poly<Rat>& monomial_sum);

// ---- expansions ----

// coefficients X_{λν} of f in the basis s_ν[(1−x)X], x ∈ {q, t}
std::map<Partition, RatFunc> expand_in_modified_schur(const SymFunc& f, int param_var);

// b_λ(x) = ∏_i φ_{m_i}(x) for λ = (1^{m_1} 2^{m_2} ...), φ_m = ∏_{j≤m}(1−x^j)
RatFunc b_lambda(const Partition& p, int param_var);

// expansion in finitely many variables x_1..x_n: exponent vector ↦ coefficient
std::map<std::vector<int>, RatFunc> expand_in_variables(const SymFunc& f, int nvars);

// ---- two-alphabet elements (X and Y simultaneously) ----

class SymFunc2 {
public:
    SymFunc2() : bx_(Basis::powersum), by_(Basis::powersum) {}
    SymFunc2(Basis bx, Basis by) : bx_(bx), by_(by) {}

    Basis basis_x() const { return bx_; }
    Basis basis_y() const { return by_; }
    const std::map<std::pair<Partition, Partition>, RatFunc>& terms() const { return terms_; }

    static SymFunc2 outer(const SymFunc& f, const SymFunc& g);

    SymFunc2 converted(Basis bx, Basis by) const;
    RatFunc coefficient(const Partition& a, const Partition& b) const;

    friend SymFunc2 operator+(const SymFunc2& a, const SymFunc2& b);
    SymFunc2& operator+=(const SymFunc2& o) { return *this = *this + o; }
    SymFunc2 scaled(const RatFunc& c) const;

    friend bool operator==(const SymFunc2& a, const SymFunc2& b);

private:
    Basis bx_, by_;
    std::map<std::pair<Partition, Partition>, RatFunc> terms_;
};

// degree-d part of Ω[XY·g] (tilde: of ω^X Ω[XY·g]) in the p⊗p basis
SymFunc2 omega_kernel2(const PlethAlphabet& g, int d, bool tilde = false);

} // namespace macref
