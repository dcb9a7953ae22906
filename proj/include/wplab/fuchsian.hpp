#pragma once

#include "wplab/maps.hpp"
#include "wplab/moebius.hpp"

#include <functional>
#include <vector>

namespace wplab {

/// Genus-2 group of the regular hyperbolic octagon with opposite sides paired.
/// generators[k] = R(k pi/4) T R(-k pi/4), k = 0..7, so generators[k + 4] is the
/// inverse of generators[k].
struct FuchsianGroup {
    std::vector<MoebiusTransform> generators;
    int genus = 2;
    /// Indices into `generators`; the product in this order is +-identity.
    std::vector<int> relation_word;
    double vertex_radius = 0.0;      ///< Euclidean radius of the octagon vertices
    double translation_length = 0.0; ///< hyperbolic length of each side pairing
};

FuchsianGroup octagon_group();

/// Distance of the relation product to +-identity (max entry).
double relation_residual(const FuchsianGroup& group);

struct GroupEnumeration {
    int max_word_length = 0;
    std::vector<MoebiusTransform> elements; ///< elements[0] is the identity
    std::vector<int> word_length;           ///< shortest word length found
};

/// All elements given by words of length <= L (L in 0..8), deduplicated up to sign.
GroupEnumeration enumerate(const FuchsianGroup& group, int L);

/// d(z, 0) <= d(z, gamma 0) for every enumerated gamma != id, with the given slack
/// on the equivalent Euclidean form |z|^2 (1 - |p|^2) <= |z - p|^2, p = gamma(0).
bool in_dirichlet_domain(const GroupEnumeration& e, cplx z, double slack = 1e-12);

struct DomainIntegral {
    double value = 0.0;
    double coarse = 0.0;     ///< same integral with half the angular nodes
    double difference = 0.0; ///< |value - coarse|
};

struct DomainQuadratureOptions {
    int angular_nodes = 48; ///< Gauss nodes per side sector (fine rule)
    int radial_nodes = 48;  ///< Gauss nodes on each ray, generic integrands only
    double tol = 1e-6;      ///< required agreement between the two rules
};

/// Integral of 1/(pi (1 - |z|^2)^2) over the Dirichlet domain at 0; g - 1 for
/// genus g. Radial integrals are exact; throws NumericalFailure when the two
/// angular rules disagree beyond tol.
DomainIntegral domain_area_integral(const FuchsianGroup& group, const DomainQuadratureOptions& opts = {});

/// Integral of a real function over the Dirichlet domain, polar Gauss rules.
DomainIntegral domain_integral(const FuchsianGroup& group, const std::function<double(cplx)>& h,
                               const DomainQuadratureOptions& opts = {});

/// How a two-point kernel transforms: holomorphic in both variables
/// (K(gz, gw) g'(z) g'(w)) or holomorphic in z and antiholomorphic in w
/// (K(gz, gw) g'(z) conj(g'(w))), like the Bergman kernel 1/(pi (1 - z conj w)^2).
enum class KernelForm { Holomorphic, Sesquiholomorphic };

double automorphy_residual(const std::function<cplx(cplx, cplx)>& K, const MoebiusTransform& gamma,
                           const std::vector<std::pair<cplx, cplx>>& points, KernelForm form);

/// Bergman kernel of the disk.
cplx bergman_kernel(cplx z, cplx w);

/// Integral over the domain of the diagonal of (K_2 K_2^*)^k at the basepoint,
/// with K_2 from the identity pair's truncation at N = 128. Rejects pairs that
/// are not the basepoint.
double basepoint_trace_term(const FuchsianGroup& group, const WeldingPair& pair, int k,
                            const DomainQuadratureOptions& opts = {});

/// Terms k = 0..kmax in one pass.
std::vector<double> basepoint_trace_terms(const FuchsianGroup& group, const WeldingPair& pair,
                                          int kmax, const DomainQuadratureOptions& opts = {});

/// sum_{k=0}^n (-1)^k C(n, k) terms[k].
double alternating_trace_sum(const std::vector<double>& terms, int n);

/// sum_{k=0}^n (-1)^k C(n, k) * term_k, the integral of K_{1,n} over the domain.
double alternating_trace_sum(const FuchsianGroup& group, const WeldingPair& pair, int n,
                             const DomainQuadratureOptions& opts = {});

} // namespace wplab
