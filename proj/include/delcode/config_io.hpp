#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "delcode/rational.hpp"

namespace delcode {

/// ordered key/value text config: one "key value" pair per line, '#' starts
/// a comment line, blank lines ignored; keys unique, insertion order kept
class KvConfig {
public:
    void set(const std::string& key, const std::string& value);
    void set_u64(const std::string& key, std::uint64_t v);
    void set_rat(const std::string& key, const Rat& r);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& def) const;
    std::uint64_t get_u64(const std::string& key) const;
    Rat get_rat(const std::string& key) const;

    const std::vector<std::pair<std::string, std::string>>& items() const {
        return items_;
    }

    std::string str() const;
    static KvConfig parse(const std::string& text);

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

} // namespace delcode
