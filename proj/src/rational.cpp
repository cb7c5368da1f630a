#include "dill/rational.hpp"

namespace dill {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(HalfInt h)
{
    if (h.is_integer())
        return std::to_string(h.doubled() / 2);
    return std::to_string(h.doubled()) + "/2";
}

} // namespace dill
