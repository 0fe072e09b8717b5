#include "cokahler/scalar.hpp"

#include <cctype>

namespace cokahler {

namespace {

bool isDecimalInteger(std::string_view s, bool allowSign) {
    if (allowSign && !s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Scalar parseScalar(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!isDecimalInteger(num, true) || !isDecimalInteger(den, false))
        throw InputError("", "non-rational coefficient \"" + std::string(text) + "\"");
    std::string numStr(num);
    if (numStr.front() == '+')
        numStr.erase(0, 1);
    mpz_class n(numStr, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw InputError("", "zero denominator in coefficient \"" + std::string(text) + "\"");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string toString(const Scalar& s) {
    if (s.get_den() == 1)
        return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace cokahler
