#include "fewprod/ground_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fewprod {

void GroundSet::normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GroundSet::GroundSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
    normalize();
    if (contains_zero())
        throw std::invalid_argument("set contains 0; construct with allow_zero if intended");
}

GroundSet::GroundSet(std::vector<Rational> elems, allow_zero_t) : elems_(std::move(elems)) {
    normalize();
}

static std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        // trim surrounding whitespace
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty element in set list");
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty set list");
    return out;
}

GroundSet GroundSet::parse(const std::string& text) { return GroundSet(parse_list(text)); }

GroundSet GroundSet::parse(const std::string& text, allow_zero_t) {
    return GroundSet(parse_list(text), allow_zero);
}

bool GroundSet::contains_zero() const { return contains(Rational(0)); }

bool GroundSet::contains(const Rational& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string GroundSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); i++) {
        if (i) s += ", ";
        s += elems_[i].str();
    }
    s += "}";
    return s;
}

}  // namespace fewprod
