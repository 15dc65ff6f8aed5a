#ifndef OGFIBER_REGISTRY_HPP
#define OGFIBER_REGISTRY_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogfiber {

// Ordered list of variable names. The index order is the canonical variable
// order every monomial order refers to.
class VarRegistry {
public:
    VarRegistry() = default;
    explicit VarRegistry(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    std::size_t index(const std::string& n) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

// names prefix1, prefix2, ... prefixN
std::vector<std::string> numbered_names(const std::string& prefix, int lo, int hi);

} // namespace ogfiber

#endif
