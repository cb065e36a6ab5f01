#include "asailab/euler.hpp"

#include <algorithm>
#include <map>

namespace asailab {

EulerFactor::EulerFactor(std::vector<ExactValue> roots) : roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end());
}

EulerFactor EulerFactor::from_root(const ExactValue& alpha) { return EulerFactor({alpha}); }

bool EulerFactor::has_simple_poles() const {
    for (std::size_t i = 1; i < roots_.size(); ++i)
        if (roots_[i] == roots_[i - 1]) return false;
    return true;
}

EulerFactor ef_mul(const EulerFactor& a, const EulerFactor& b) {
    std::vector<ExactValue> out = a.roots_;
    out.insert(out.end(), b.roots_.begin(), b.roots_.end());
    return EulerFactor(std::move(out));
}

bool ef_divides(const EulerFactor& a, const EulerFactor& b) {
    // multiset inclusion on sorted vectors
    std::size_t i = 0, j = 0;
    while (i < a.roots_.size() && j < b.roots_.size()) {
        if (a.roots_[i] == b.roots_[j]) { ++i; ++j; }
        else if (b.roots_[j] < a.roots_[i]) ++j;
        else return false;  // a's smallest unmatched root is absent from b
    }
    return i == a.roots_.size();
}

namespace {

std::map<ExactValue, std::pair<int, int>> multiplicities(const EulerFactor& a,
                                                         const EulerFactor& b) {
    std::map<ExactValue, std::pair<int, int>> m;
    for (const ExactValue& r : a.inverse_roots()) m[r].first++;
    for (const ExactValue& r : b.inverse_roots()) m[r].second++;
    return m;
}

}  // namespace

EulerFactor ef_lcm(const EulerFactor& a, const EulerFactor& b) {
    std::vector<ExactValue> out;
    for (const auto& [root, mult] : multiplicities(a, b))
        for (int i = 0; i < std::max(mult.first, mult.second); ++i) out.push_back(root);
    return EulerFactor(std::move(out));
}

EulerFactor ef_gcd(const EulerFactor& a, const EulerFactor& b) {
    std::vector<ExactValue> out;
    for (const auto& [root, mult] : multiplicities(a, b))
        for (int i = 0; i < std::min(mult.first, mult.second); ++i) out.push_back(root);
    return EulerFactor(std::move(out));
}

std::string EulerFactor::str() const {
    if (roots_.empty()) return "1";
    std::string s = "1/(";
    for (const ExactValue& r : roots_) {
        if (r == ExactValue::minus_one()) {
            s += "(1 + X)";
        } else if (r.is_one()) {
            s += "(1 - X)";
        } else {
            s += "(1 - " + r.str() + "*X)";
        }
    }
    s += ")";
    return s;
}

}  // namespace asailab
