#pragma once

#include "lefschetz/check_report.hpp"
#include "lefschetz/form.hpp"
#include "lefschetz/linear_map.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// Linear map with T*w = w (w the standard symplectic form); the pullback
/// identity and det = 1 are asserted at construction, never assumed.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(LinearMap m);
    const LinearMap& map() const { return m_; }
    int half_dim() const { return m_.half_dim(); }

private:
    LinearMap m_;
};

/// Diagonal torus element x_i -> t_i x_i, y_i -> y_i / t_i.
SymplecticMatrix torus_element(const std::vector<Rational>& t);

/// Interchanges the (x_r, y_r) and (x_i, y_i) planes as blocks.
SymplecticMatrix plane_swap(int n, int r, int i);

/// x_j -> x_j - x_i, y_i -> y_i + y_j, everything else fixed.
SymplecticMatrix shear_f_ij(int n, int i, int j);

/// (x_j, y_j) -> (-y_j, x_j), identity elsewhere.
SymplecticMatrix rotation_j(int n, int j);

/// x_r -> x_r + y_s, x_s -> x_s + y_r, everything else fixed.
SymplecticMatrix hyperbolic_shear(int n, int r, int s);

/// Block permutation sending plane p to plane sigma[p-1].
SymplecticMatrix plane_permutation(int n, const std::vector<int>& sigma);

/// Coordinates of a 2-form in the torus weight basis: E components on
/// dx_i^dx_j (i<j), E' on dy_i^dy_j (i<j), mixed F on dx_i^dy_j (i != j)
/// and diagonal F on dx_i^dy_i. Reassembling the components reproduces the
/// input exactly.
struct WeightComponents {
    int n = 0;
    std::map<std::pair<int, int>, Rational> e;
    std::map<std::pair<int, int>, Rational> e_prime;
    std::map<std::pair<int, int>, Rational> f_mixed;
    std::map<int, Rational> f_diag;

    Form reassemble() const;
};

WeightComponents weight_decompose(const Form& a);

/// One named generator with its matrix; the catalog order is fixed so
/// word enumeration is reproducible.
struct Generator {
    std::string name;
    std::vector<std::string> args;
    LinearMap map;

    nlohmann::json to_json() const { return {{"gen", name}, {"args", args}}; }
};

/// Torus elements with one coordinate scaled by 2 or 1/2, plane swaps,
/// shears, rotations and hyperbolic shears, in that order.
std::vector<Generator> generator_catalog(int n);

/// Breadth-first span saturation: pullbacks of alpha under generator words
/// up to the budget, with w adjoined. alpha must be non-degenerate and not
/// proportional to w. Passes when the span reaches dim C(2n,2); the witness
/// carries the spanning words and forms.
CheckReport orbit_span(const Form& alpha, int budget);

/// The explicit pullback identity of the mixing shear:
/// f_{i,j}*(dx_i^dy_i) - dx_i^dy_i = dx_i^dy_j.
CheckReport shear_identity_check(int n, int i, int j);

/// dx_r^dy_r = (1/n)(alpha_1 + ... + alpha_n + w) with
/// alpha_i = dx_r^dy_r - dx_i^dy_i.
CheckReport averaging_identity_check(int n, int r);

/// Span implication steps, each verified by exact membership on synthetic
/// seeds: a diagonal F weight spreads to all mixed weights; a mixed weight
/// produces every E and E' pair; an E pair recovers the diagonal F weights
/// with w adjoined.
CheckReport span_step_f_diagonal(int n, int r);
CheckReport span_step_mixed_to_e(int n, int r, int s);
CheckReport span_step_e_to_diagonal(int n, int r, int s);

/// Family of volume-compatible pullbacks whose (n-1)-st powers span the
/// space of (2n-2)-forms.
struct LargeFamily {
    std::vector<LinearMap> members;
    std::vector<Form> pullback_forms;
    int rank = 0;
    int target_rank = 0;
    bool complete = false;
    nlohmann::json certificate = nlohmann::json::array();
};

/// Greedy saturation over pool elements composed with generator words. Each
/// pool map (and hence every candidate) must satisfy (S*w)^n = w^n; the
/// default pool conjugates the scale-2 volume-preserving diagonal map into
/// each plane position. Saturation failure is reported in the result, not
/// thrown.
LargeFamily construct_large_family(int n, const std::vector<LinearMap>& pool, int budget);
LargeFamily construct_large_family(int n);

}  // namespace lefschetz
