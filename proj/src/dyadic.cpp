#include "gt/dyadic.hpp"

#include <stdexcept>

namespace gt {

Dyadic Dyadic::fraction(std::uint64_t num, unsigned exp) {
    if (exp >= 63) throw std::invalid_argument("dyadic exponent too large");
    if (num > (std::uint64_t{1} << exp)) throw std::invalid_argument("dyadic above 1");
    while (exp > 0 && num % 2 == 0) {
        num /= 2;
        --exp;
    }
    Dyadic d;
    d.num_ = num;
    d.exp_ = exp;
    return d;
}

Dyadic Dyadic::plus(Dyadic o) const {
    const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    const std::uint64_t a = num_ << (e - exp_);
    const std::uint64_t b = o.num_ << (e - o.exp_);
    return fraction(a + b, e);
}

Dyadic Dyadic::scaled_down(unsigned k) const {
    if (num_ == 0) return zero();
    return fraction(num_, exp_ + k);
}

bool Dyadic::operator<(Dyadic o) const {
    const unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    return (num_ << (e - exp_)) < (o.num_ << (e - o.exp_));
}

std::string Dyadic::str() const {
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

}  // namespace gt
