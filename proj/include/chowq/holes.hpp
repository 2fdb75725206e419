#pragma once

// Cycles on the cube of a hypothetical small quadric whose first higher Witt
// indices are a = 2^{p-1} and b = 2^{m-1}, and the computation showing that
// such a quadric cannot exist.

#include "chowq/cycle.hpp"
#include "chowq/structure.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chowq {

struct HoleParams {
    int n = 0, m = 0, p = 0;
    int a = 0, b = 0, c = 0, d = 0, D = 0;
    int N_b = 0, N_c = 0, J = 0;

    /// Validates n >= 4, 3 <= m <= n-1, 1 <= p <= m-2 and derives the rest.
    static HoleParams make(int n, int m, int p);
    Geometry geometry() const { return Geometry(D); }
    int dim_form() const { return D + 2; }
};

/// Witt indices forced on a form of dimension 2^n + … + 2^m + 2^p in I^n:
/// (2^{p-1}, 2^{m-1}, 2^m, …, 2^{n-1}).
SplittingData forced_witt_sequence(int n, int dim);

/// Sym(Σ_{i=1}^{N_b} h^0 × h^{(i-1)b+a} × l_{ib+a-1}).
Cycle build_mu_zero(const HoleParams& params);
/// h^a × (Sym(Σ_{i=1}^{N_c} h^{(i-1)c+b+a} × l_{ic+b+a-1}) · (h^{(j-1)a} × h^{c-b-ja})), 1 <= j <= J.
Cycle build_chi(const HoleParams& params, int j);

/// δ*(y ∘ (S^{2a}(x) · (h^0 × h^0 × h^{b-1}))); ξ(μ) = xi_bilinear(μ, μ).
Cycle xi_bilinear(const Cycle& x, const Cycle& y, const HoleParams& params);
Cycle build_xi(const Cycle& mu, const HoleParams& params);

/// Sym(Σ_{i=1}^{N_b} h^{(i-1)b+a} × l_{ib-a-1} + h^{(i-1)b+3a} × l_{ib+a-1}).
Cycle expected_xi_mu_zero(const HoleParams& params);
/// h^a × l_{b-a-1}.
BasisElement contradiction_target(const HoleParams& params);

/// S^{<=2a}(h^{ia}) and S^{<=2a}(l_{ia-1}) by the residue of i mod 4.
Cycle case_table_h(const HoleParams& params, int i);
Cycle case_table_l(const HoleParams& params, int i);

enum class Method { automatic, brute, bilinear };

struct ContradictionOptions {
    Method method = Method::automatic;
    unsigned jobs = 0;
    /// Above 2^threshold_bits choices of μ' the automatic method is bilinear.
    int threshold_bits = 20;
    /// Run both methods and record whether they agree.
    bool cross_check = false;
};

struct Certificate {
    bool certified = false;
    nlohmann::json json;
};

/// Checks that ξ(μ_0 + μ') contains h^a × l_{b-a-1} for every
/// μ' = Σ_{A1} χ_j + Σ_{A2} t12(χ_j) + Σ_{A3} t13(χ_j).
Certificate verify_contradiction(const HoleParams& params, const ContradictionOptions& options = {});

} // namespace chowq
