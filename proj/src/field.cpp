#include "delcode/field.hpp"

#include <sstream>

namespace delcode {

std::string Polynomial::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ' ';
        os << coeffs[i];
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& text, const PrimeField& F) {
    std::istringstream is(text);
    std::vector<std::uint32_t> c;
    std::uint64_t v;
    while (is >> v) {
        if (v >= F.q())
            throw std::invalid_argument("Polynomial::parse: coefficient " +
                                        std::to_string(v) + " outside field");
        c.push_back((std::uint32_t)v);
    }
    if (!is.eof())
        throw std::invalid_argument("Polynomial::parse: bad token in \"" +
                                    text + "\"");
    return Polynomial::from(std::move(c));
}

} // namespace delcode
