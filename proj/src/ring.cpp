#include "dk/ring.hpp"

#include <set>

namespace dk {

Ring::Ring(std::vector<std::string> vars, std::vector<long> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
    // zero variables allowed: the base ring of a rigid germ
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        throw DkError("weight count does not match variable count");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw DkError("empty variable name");
        if (!seen.insert(v).second) throw DkError("duplicate variable name '" + v + "'");
    }
    for (long w : weights_)
        if (w <= 0) throw DkError("weights must be strictly positive");
}

bool Ring::weighted() const {
    for (long w : weights_)
        if (w != 1) return true;
    return false;
}

int Ring::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

RingPtr Ring::make(std::vector<std::string> vars, std::vector<long> weights) {
    return std::make_shared<const Ring>(std::move(vars), std::move(weights));
}

}  // namespace dk
