#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "curvecert/error.hpp"

namespace curvecert {

/// m(G): minimum dimension of a faithful Q-rational representation of G.
class MGTable {
public:
    struct Entry {
        int value;
        bool external;  // supplied by the user rather than shipped
    };

    /// Shipped values: m(S_n) = n - 1 for n >= 5 and m(PSL(2,7)) = 6.
    static MGTable builtin() {
        MGTable t;
        t.entries_["PSL(2,7)"] = {6, false};
        return t;
    }

    /// Merge a table file ({"entries": {"G": m, ...}}); file entries override.
    void merge_file(const std::string& path, bool external = true) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open m(G) table " + path);
        nlohmann::json j;
        in >> j;
        for (const auto& [name, value] : j.at("entries").items()) entries_[name] = {value.get<int>(), external};
    }

    void set(const std::string& group, int value, bool external = true) { entries_[group] = {value, external}; }

    std::optional<Entry> lookup(const std::string& group) const {
        if (auto it = entries_.find(group); it != entries_.end()) return it->second;
        if (group.size() > 1 && group[0] == 'S' && group.find_first_not_of("0123456789", 1) == std::string::npos) {
            int n = std::stoi(group.substr(1));
            if (n >= 5) return Entry{n - 1, false};
        }
        return std::nullopt;
    }

    const std::map<std::string, Entry>& entries() const { return entries_; }

private:
    std::map<std::string, Entry> entries_;
};

/// Stored m(G); throws for groups missing from the table.
inline int ga_mG(const std::string& group, const MGTable& table) {
    auto e = table.lookup(group);
    if (!e) throw DomainError("m(G) unknown for group " + group + "; supply an external value");
    return e->value;
}

}  // namespace curvecert
