#include "delcode/config_io.hpp"

#include <sstream>
#include <stdexcept>

namespace delcode {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

void KvConfig::set(const std::string& key, const std::string& value) {
    if (key.empty() || key.find_first_of(" \t\r\n#") != std::string::npos)
        throw std::invalid_argument("KvConfig: bad key \"" + key + "\"");
    std::string v = trim(value);
    if (v.empty() || v.find_first_of("\n") != std::string::npos)
        throw std::invalid_argument("KvConfig: bad value for key " + key);
    for (auto& it : items_)
        if (it.first == key) {
            it.second = v;
            return;
        }
    items_.emplace_back(key, v);
}

void KvConfig::set_u64(const std::string& key, std::uint64_t v) {
    set(key, std::to_string(v));
}

void KvConfig::set_rat(const std::string& key, const Rat& r) {
    set(key, r.str());
}

bool KvConfig::has(const std::string& key) const {
    for (const auto& it : items_)
        if (it.first == key) return true;
    return false;
}

const std::string& KvConfig::get(const std::string& key) const {
    for (const auto& it : items_)
        if (it.first == key) return it.second;
    throw std::invalid_argument("KvConfig: missing key \"" + key + "\"");
}

std::string KvConfig::get_or(const std::string& key,
                             const std::string& def) const {
    for (const auto& it : items_)
        if (it.first == key) return it.second;
    return def;
}

std::uint64_t KvConfig::get_u64(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t pos = 0;
    std::uint64_t r;
    try {
        r = std::stoull(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("KvConfig: key " + key +
                                    " is not an integer: " + v);
    }
    if (pos != v.size())
        throw std::invalid_argument("KvConfig: key " + key +
                                    " has trailing junk: " + v);
    return r;
}

Rat KvConfig::get_rat(const std::string& key) const {
    return Rat::parse(get(key));
}

std::string KvConfig::str() const {
    std::ostringstream os;
    for (const auto& it : items_) os << it.first << ' ' << it.second << '\n';
    return os.str();
}

KvConfig KvConfig::parse(const std::string& text) {
    KvConfig cfg;
    std::istringstream is(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t sp = t.find_first_of(" \t");
        if (sp == std::string::npos)
            throw std::invalid_argument("KvConfig: line " +
                                        std::to_string(lineNo) +
                                        " has no value: " + t);
        std::string key = t.substr(0, sp);
        std::string value = trim(t.substr(sp + 1));
        if (cfg.has(key))
            throw std::invalid_argument("KvConfig: duplicate key " + key);
        cfg.set(key, value);
    }
    return cfg;
}

} // namespace delcode
