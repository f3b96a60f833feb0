#pragma once

#include <map>
#include <string>
#include <vector>

#include "vtx/cyclotomic.hpp"
#include "vtx/matrix.hpp"
#include "vtx/partition.hpp"
#include "vtx/permutation.hpp"

namespace vtx {

/* The Hecke algebra H_q(S_n) over Q(zeta_e), q = zeta_e, with basis {T_w} and
   relations (T_i - q)(T_i + 1) = 0, T_w T_i = T_{w s_i} if the length goes up
   and q T_{w s_i} + (q-1) T_w otherwise.  Elements are dense coefficient
   vectors over the group catalog's element order. */
class HeckeAlgebra {
public:
    HeckeAlgebra(int n, int e, int max_n_guard = 6);

    using Elt = std::vector<Cyc>;

    int n() const { return n_; }
    int e() const { return e_; }
    const CycField& field() const { return F_; }
    const SymmetricGroup& group() const { return W_; }
    const Cyc& q() const { return q_; }
    const Cyc& q_inv() const { return qinv_; }
    int dim() const { return W_.order(); }

    Elt zero() const { return Elt(dim(), Cyc(0)); }
    Elt unit() const;
    Elt basis_elt(int widx) const;

    void mul_gen_right_inplace(Elt& x, int i) const; // x := x * T_i
    void mul_gen_left_inplace(Elt& x, int i) const;  // x := T_i * x
    Elt mul_Tw_left(int widx, const Elt& x) const;   // T_w * x
    Elt mul(const Elt& a, const Elt& b) const;

    Cyc tau(const Elt& x) const { return x[W_.index_of(Perm::identity(n_))]; }
    Elt star(const Elt& x) const; // T_w -> T_{w^{-1}}

    // Sum over S_comp of T_w ("x" element) and of (-q)^{-l(w)} T_w ("y" element).
    Elt young_symmetrizer_plain(const std::vector<int>& comp) const;
    Elt young_symmetrizer_signed(const std::vector<int>& comp) const;

    // Relative norm: sum over minimal coset reps d of S_mu of q^{-l(d)} T_d T_{d^{-1}}.
    Elt norm_element(const std::vector<int>& mu) const;

    /* Dual basis identity behind the biadjunction: for every w,
       sum_d T_d * proj_mu(q^{-l(d)} T_{d^{-1}} T_w) = T_w, where proj_mu keeps
       the coefficients supported on S_mu.  Returns true iff it holds. */
    bool check_dual_basis_identity(const std::vector<int>& mu) const;

    Elt project_to_young(const Elt& x, const std::vector<int>& mu) const;

private:
    int n_, e_;
    const CycField& F_;
    const SymmetricGroup& W_;
    Cyc q_, qinv_, q_minus_one_;
    int id_idx_;
};

/* A finite-dimensional left module over the parabolic algebra H(S_mu), given
   by the action matrices of the generators T_i internal to mu. */
struct HModule {
    int n = 0;
    int e = 0;
    std::vector<int> mu;    // ambient composition of n
    int dim = 0;
    std::map<int, Mat> act; // generator index -> dim x dim matrix
    std::string label;

    bool full_ambient() const { return mu.size() == 1; }
};

// Asserts the quadratic, braid and commutation relations on the action matrices.
void check_module_relations(const HeckeAlgebra& H, const HModule& M);

// rho(T_w) for w in S_mu, memoized along the weak order.
class ActionTable {
public:
    ActionTable(const HeckeAlgebra& H, const HModule& M) : H_(H), M_(M) {}
    const Mat& of(int widx);
    Mat of_element(const HeckeAlgebra::Elt& x); // sum of coefficients times rho(T_w)

private:
    const HeckeAlgebra& H_;
    const HModule& M_;
    std::map<int, Mat> cache_;
};

HModule regular_module(const HeckeAlgebra& H);
// One-dimensional module over H(S_mu): per block, T_i acts by q (index) or -1 (sign).
HModule one_dim_module(const HeckeAlgebra& H, const std::vector<int>& mu,
                       const std::vector<bool>& sign_block);

} // namespace vtx
