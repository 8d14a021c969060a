#pragma once

#include <vector>

#include "hopftwist/star.hpp"

namespace hopftwist {

/// Components V^k of a vector field V = V^k del_k.
std::vector<Geom> field_components(const Geom& v, int dim);
/// sum_k V^k del_k.
Geom field_from_components(const std::vector<Geom>& comps);

/// Symmetric matrix g_ij of functions on the coordinate frame.
class Metric {
public:
    /// Row-major entries; throws std::invalid_argument unless g_ij = g_ji.
    Metric(int dim, std::vector<Geom> entries);
    static Metric euclidean(int dim);
    /// (1/2)(dx1 (x) dx3 + dx3 (x) dx1) + dx2 (x) dx2 on R^3.
    static Metric lightcone_minkowski();

    int dim() const { return dim_; }
    const Geom& at(int i, int j) const { return g_[static_cast<std::size_t>(i * dim_ + j)]; }
    /// g(X, Y) = X^i g_ij Y^j.
    Geom operator()(const Geom& x, const Geom& y) const;
    Geom determinant() const;
    /// det g is a unit: an hbar series with invertible constant term.
    bool is_nondegenerate() const;
    /// Inverse matrix g^ij; throws AlgebraError when det g is not a unit.
    std::vector<Geom> inverse() const;

private:
    int dim_;
    std::vector<Geom> g_;
};

/// xi |> g(X, Y) = g(xi |> X, Y) + g(X, xi |> Y) for every realized generator
/// and coordinate fields X, Y.
Report metric_equivariance(const Metric& g, const Realization& phi);

/// Covariant derivative on the coordinate frame:
/// nabla_X Y = X^i (del_i Y^k + Gamma^k_ij Y^j) del_k.
class Connection {
public:
    static Connection flat(int dim);
    /// Gamma^k_ij stored at index (k * dim + i) * dim + j.
    Connection(int dim, std::vector<Geom> christoffel);

    int dim() const { return dim_; }
    const Geom& gamma(int k, int i, int j) const {
        return gamma_[static_cast<std::size_t>((k * dim_ + i) * dim_ + j)];
    }
    bool is_flat() const;

private:
    int dim_;
    std::vector<Geom> gamma_;
};

Geom nabla(const Connection& c, const Geom& x, const Geom& y);
/// Induced derivative on 1-forms: <nabla_X w, Y> = X(<w, Y>) - <w, nabla_X Y>.
Geom dual_nabla(const Connection& c, const Geom& x, const Geom& w);

/// The unique torsion-free metric connection (Koszul formula on the
/// coordinate frame); throws AlgebraError when det g is not a unit.
Connection koszul_levi_civita(const Metric& g);

/// nabla^F_X Y = nabla_{F^-1_1 |> X}(F^-1_2 |> Y).
Geom twist_nabla(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y);
/// g_F(X, Y) = g(F^-1_1 |> X, F^-1_2 |> Y).
Geom twist_metric(const StarAlgebra& a, const Metric& g, const Geom& x, const Geom& y);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_{R^-1_1 |> Y} nabla_{R^-1_2 |> X} Z - nabla_{[X,Y]} Z
/// for the twisted derivative, bracket and braiding of `a` (`rinv` overrides
/// the braiding).
Geom curvature(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y, const Geom& z,
               const TensorElement* rinv = nullptr);
/// Tor(X,Y) = nabla_X Y - nabla_{R^-1_1 |> Y}(R^-1_2 |> X) - [X,Y].
Geom torsion(const StarAlgebra& a, const Connection& c, const Geom& x, const Geom& y,
             const TensorElement* rinv = nullptr);

/// Braided metric compatibility of nabla^F with g_F and braided torsion of
/// nabla^F on every pair and triple drawn from `frame`; `c` is checked to be
/// Levi-Civita for `g` first.
Report connection_report(const StarAlgebra& a, const Connection& c, const Metric& g, const std::vector<Geom>& frame);

/// H, E, Ep and the coordinate fields of the realization.
std::vector<Geom> standard_frame(const Realization& phi);

}  // namespace hopftwist
