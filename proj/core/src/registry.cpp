#include "ogfiber/registry.hpp"

namespace ogfiber {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
}

std::size_t VarRegistry::index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::out_of_range("unknown variable: " + n);
    return it->second;
}

RegistryPtr make_registry(std::vector<std::string> names) {
    return std::make_shared<VarRegistry>(std::move(names));
}

std::vector<std::string> numbered_names(const std::string& prefix, int lo, int hi) {
    std::vector<std::string> out;
    for (int i = lo; i <= hi; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace ogfiber
