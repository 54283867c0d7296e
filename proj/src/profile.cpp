#include "atrans/profile.hpp"

#include <stdexcept>

#include "atrans/error.hpp"

namespace atrans {

int SizeSet::count() const {
    int c = 0;
    for (int v = 0; v <= max_value; ++v)
        if (contains(v)) ++c;
    return c;
}

int SizeSet::min() const {
    for (int v = 0; v <= max_value; ++v)
        if (contains(v)) return v;
    return -1;
}

int SizeSet::max() const {
    for (int v = max_value; v >= 0; --v)
        if (contains(v)) return v;
    return -1;
}

std::vector<int> SizeSet::values() const {
    std::vector<int> out;
    for (int v = 0; v <= max_value; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::string SizeSet::to_string() const {
    std::string out;
    for (int v : values()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

Profile::Profile(SizeSet allowed, int r) : allowed_(allowed), r_(r) {
    if (r_ < 1 || r_ > SizeSet::max_value)
        throw std::invalid_argument("profile: uniformity out of range");
    if (allowed_.empty())
        throw std::invalid_argument("profile: empty set of intersection sizes");
    if (allowed_.max() > r_)
        throw std::invalid_argument("profile: size " + std::to_string(allowed_.max()) +
                                    " exceeds uniformity " + std::to_string(r_));
}

Profile Profile::parse(const std::string& text, int r) {
    if (r < 1 || r > SizeSet::max_value)
        throw ParseError("profile: uniformity out of range");
    auto make = [&](SizeSet s) {
        try {
            return Profile(s, r);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    };
    if (text == "strong") return make(SizeSet::of({0, 1}));
    if (text == "independent") return make(SizeSet::range(0, r - 1));
    if (text == "all") return make(SizeSet::range(0, r));
    if (text == "even" || text == "odd") {
        SizeSet s;
        for (int v = (text == "even" ? 0 : 1); v <= r; v += 2) s.add(v);
        return make(s);
    }

    SizeSet s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        // tolerate surrounding spaces
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty()) throw ParseError("profile: empty entry in '" + text + "'");
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("profile: bad entry '" + token + "'");
        }
        if (used != token.size() || value < 0)
            throw ParseError("profile: bad entry '" + token + "'");
        if (value > r)
            throw ParseError("profile: size " + token + " exceeds uniformity " +
                             std::to_string(r));
        s.add(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make(s);
}

Profile Profile::complement() const {
    SizeSet s;
    for (int a : allowed_.values()) s.add(r_ - a);
    return Profile(s, r_);
}

SizeSet shift_profile(const Profile& p, int offset) {
    if (offset < 0) throw std::invalid_argument("shift_profile: negative offset");
    return p.allowed().shifted_down(offset);
}

} // namespace atrans
