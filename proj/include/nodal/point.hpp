#pragma once

#include "nodal/scalar.hpp"

#include <vector>

namespace nodal {

/// Point of projective n-space, stored in canonical form: the first nonzero
/// coordinate is scaled to 1, so equality and hashing are exact.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Scalar> coords);

    /// Convenience constructor from small integers, rational backend.
    static ProjectivePoint of(std::initializer_list<long> coords);

    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Field field() const { return coords_.front().field(); }

    /// Reduce rational coordinates mod p (throws if p divides a denominator
    /// or the reduction collapses to the zero vector).
    ProjectivePoint reduced_mod(std::uint64_t p) const;

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

    /// Deterministic total order (coordinate-wise on canonical forms).
    static int compare(const ProjectivePoint& a, const ProjectivePoint& b);
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return compare(a, b) < 0;
    }

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Scalar> coords_;
};

}  // namespace nodal

template <>
struct std::hash<nodal::ProjectivePoint> {
    std::size_t operator()(const nodal::ProjectivePoint& p) const { return p.hash(); }
};
