#pragma once

#include "rcalg/betti.hpp"
#include "rcalg/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace rcalg {

/// constant + sum coeff * param
struct LinearExpr
{
    long long constant = 0;
    std::map<std::string, long long> coeffs;

    long long evaluate(const std::map<std::string, long long>& values) const;
    bool is_constant() const { return coeffs.empty(); }
    std::string to_string() const;
};

/// A shape whose multiplicities may depend linearly on named nonnegative parameters.
struct SymbolicShape
{
    struct Term
    {
        int i;
        int twist;
        LinearExpr mult;
    };
    ResolutionShape base;
    std::vector<Term> terms;
    std::vector<std::string> params;
    std::vector<std::string> notices;

    /// Missing parameters default to 0. InfeasibleError if a multiplicity turns negative.
    ResolutionShape evaluate(const std::map<std::string, long long>& values = {}) const;
    std::string to_string() const;
};

/// Closed-form alpha_i of the compressed Gorenstein algebra with socle degree 2t.
long long compressed_gor_alpha(int n, int t, int i);
ResolutionShape compressed_gor_even(int n, int t);

/// Relatively compressed Gorenstein algebra, socle degree 2t, w.r.t. a CI of the given degrees.
ResolutionShape rc_gor_even(int n, int t, std::vector<int> ci_degrees);

/// Odd socle degree 2t+1. Parameters y2..y{ceil(n/2)} count the unknown ghost pairs.
SymbolicShape rc_gor_odd_shape(int n, int t, std::vector<int> ci_degrees);

struct ShapeCheck
{
    bool euler = false;
    bool duality = false;
    bool ok() const { return euler && duality; }
};
/// Euler identity against the odd-socle minimum bound and self-duality with socle 2t+1.
ShapeCheck check_gor_odd(const ResolutionShape& shape, int n, int t, const std::vector<int>& ci_degrees);

struct PointsResolution
{
    std::vector<long long> hvector;
    ResolutionShape shape;  ///< resolution of R/I(X) in 4 variables
};
PointsResolution quadric_points_resolution(int N);

ResolutionShape rc_gor_odd_quadric(int t);

/// Expected resolution assuming the minimal resolution conjecture for points on a CI.
ResolutionShape mrc_resolution(int n, std::vector<int> ci_degrees, int t);

struct AciResult
{
    ResolutionShape aci;
    ResolutionShape gorenstein;
    int c = 0;  ///< socle degree of the intermediate Gorenstein algebra
    int r = 0;
};
AciResult aci_resolution(int n, const std::vector<int>& degrees);

/// Residual of a CI with the given degrees by c + c general forms of degree d - s - n.
/// Parameters g2..g{n-1} count the undetermined ghost pairs.
struct LevelShape
{
    SymbolicShape residual;
    SymbolicShape forms;  ///< shape of the ideal of general forms
    int delta = 0;        ///< socle degree of R/(c + forms)
    int form_degree = 0;
};
LevelShape general_forms_level_shape(int n, const std::vector<int>& ci_degrees, int s, int c);

} // namespace rcalg
