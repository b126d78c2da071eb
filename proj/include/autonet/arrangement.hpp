#pragma once

#include <map>
#include <optional>
#include <vector>

#include "autonet/subcube.hpp"

namespace autonet {

/// Raised by Arrangement::validate; identifies the first violating pair.
class ArrangementValidationError : public std::runtime_error {
public:
    enum class Kind { DisjointPair, ContainmentPair };
    ArrangementValidationError(Kind kind, std::size_t first, std::size_t second);
    Kind kind() const { return kind_; }
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    Kind kind_;
    std::size_t first_;
    std::size_t second_;
};

/// Validated family of pairwise-intersecting, containment-free subcubes.
class Arrangement {
public:
    static Arrangement validate(int n, std::vector<Subcube> cubes);

    int n() const { return n_; }
    const std::vector<Subcube>& cubes() const { return cubes_; }
    bool contains_point(state_t x) const;

    /// The content: union of all cubes, ascending.
    std::vector<state_t> content() const;

private:
    Arrangement(int n, std::vector<Subcube> cubes) : n_(n), cubes_(std::move(cubes)) {}
    int n_;
    std::vector<Subcube> cubes_;
};

/// Dimension taxonomy of an arrangement: tau = intersection of supports
/// (external), sigma = union of supports, free = complement of sigma,
/// tight = sigma \ tau. The intersection cube X[sigma, alpha] is nonempty
/// by construction, which is exactly the content of the intersection lemma.
struct DimensionReport {
    NodeSet external;
    NodeSet free;
    NodeSet tight;
    Subcube intersection;  ///< Y = X[sigma, alpha]
    Subcube enclosing;     ///< K = X[tau, alpha_tau], smallest cube containing the content
    std::map<int, std::vector<state_t>> borders;  ///< per tight node, all i-borders ascending
};

DimensionReport dimension_report(const Arrangement& x, const Guard& guard = {});

/// Direct-definition dimension classes of an arbitrary nonempty point set.
struct SetDimensions {
    NodeSet external;
    NodeSet free;
    NodeSet tight;
    std::map<int, std::vector<state_t>> borders;  ///< per tight node
};

SetDimensions classify_set_dimensions(int n, const std::vector<state_t>& c);

/// All inclusion-maximal subcubes contained in C (the prime implicants of
/// C's indicator function). None contains another; their union is C.
std::vector<Subcube> maximal_subcubes(int n, const std::vector<state_t>& c, const Guard& guard = {});

/// Decides whether C is the content of an arrangement and returns a witness
/// arrangement if so.
///
/// Star criterion: C is a content iff some y in C has interval(x, y)
/// contained in C for every x in C. If C is the content of an arrangement,
/// the cubes share a point y (their fixed values agree pairwise, so fixing
/// all of them at once is consistent), and for any x the cube through x
/// also holds y, hence interval(x, y) sits inside it. Conversely the
/// intervals to a star point y all contain y, so their inclusion-maximal
/// members are pairwise intersecting and containment-free, and they cover
/// C because x lies in interval(x, y): a witness arrangement with content
/// exactly C. The returned witness is that family for the smallest star
/// point. Its structural dimension classes agree with the point-set
/// classes of C: a maximal interval never fixes a flip-closed dimension
/// (freeing it yields the interval from the flipped endpoint, contradicting
/// maximality), and every interval fixes a dimension on which C is
/// constant.
std::optional<Arrangement> is_arrangement_content(int n, const std::vector<state_t>& c);

}  // namespace autonet
