#include "shelf/sign_string.hpp"

#include "shelf/errors.hpp"

namespace shelf {

SignString::SignString(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw InputError("SignString: empty word");
    for (auto s : signs_)
        if (s != 1 && s != -1) throw InputError("SignString: signs must be +/-1");
}

SignString SignString::parse(const std::string& text) {
    std::vector<std::int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else if (c != ' ')
            throw InputError(std::string("SignString: unexpected character '") + c + "'");
    }
    return SignString(std::move(signs));
}

SignString SignString::alternating(long m) {
    if (m < 1) throw InputError("SignString::alternating: m must be >= 1");
    std::vector<std::int8_t> signs;
    signs.reserve(static_cast<size_t>(2 * m));
    for (long i = 0; i < m; ++i) {
        signs.push_back(1);
        signs.push_back(-1);
    }
    return SignString(std::move(signs));
}

std::string SignString::to_string() const {
    std::string s;
    s.reserve(signs_.size());
    for (auto v : signs_) s += (v > 0 ? '+' : '-');
    return s;
}

SignString compose(const SignString& x, const SignString& y) {
    std::vector<std::int8_t> out;
    out.reserve(static_cast<size_t>(x.size()) * static_cast<size_t>(y.size()));
    for (int i = 1; i <= x.size(); ++i) {
        if (x.sign(i) > 0) {
            for (int j = 1; j <= y.size(); ++j)
                out.push_back(static_cast<std::int8_t>(y.sign(j)));
        } else {
            for (int j = y.size(); j >= 1; --j)
                out.push_back(static_cast<std::int8_t>(-y.sign(j)));
        }
    }
    return SignString(std::move(out));
}

} // namespace shelf
