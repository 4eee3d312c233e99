#include "nodal/point.hpp"

#include <boost/functional/hash.hpp>

namespace nodal {

ProjectivePoint::ProjectivePoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("projective point needs coordinates");
    std::size_t lead = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i].match_field(coords_.front());
        if (lead == coords_.size() && !coords_[i].is_zero()) lead = i;
    }
    if (lead == coords_.size()) throw std::invalid_argument("all projective coordinates are zero");
    const Scalar inv = coords_[lead].inverse();
    for (auto& c : coords_) c *= inv;
}

ProjectivePoint ProjectivePoint::of(std::initializer_list<long> coords) {
    std::vector<Scalar> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return ProjectivePoint(std::move(v));
}

ProjectivePoint ProjectivePoint::reduced_mod(std::uint64_t p) const {
    std::vector<Scalar> v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) v.push_back(Scalar::mod(c.rat(), p));
    return ProjectivePoint(std::move(v));
}

int ProjectivePoint::compare(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords_.size() != b.coords_.size())
        return a.coords_.size() < b.coords_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (int c = Scalar::compare(a.coords_[i], b.coords_[i]); c != 0) return c;
    return 0;
}

std::string ProjectivePoint::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ":";
        out += coords_[i].str();
    }
    return out;
}

std::size_t ProjectivePoint::hash() const {
    std::size_t seed = 0;
    for (const auto& c : coords_) boost::hash_combine(seed, c.hash());
    return seed;
}

}  // namespace nodal
