#include "supercohom/scalar.hpp"

#include <cctype>

namespace supercohom {

namespace {

bool parse_integer(std::string_view text, Integer& out)
{
    if (text.empty())
        return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (!parse_integer(text.substr(0, slash), num))
        throw InputError("malformed scalar '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        auto rest = text.substr(slash + 1);
        if (rest.empty() || rest[0] == '-' || rest[0] == '+' || !parse_integer(rest, den))
            throw InputError("malformed scalar '" + std::string(text) + "'");
        if (den == 0)
            throw InputError("zero denominator in scalar '" + std::string(text) + "'");
    }
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

std::string to_string(const Scalar& s)
{
    if (s.get_den() == 1)
        return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

} // namespace supercohom
