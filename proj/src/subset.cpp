#include "nesto/subset.hpp"

#include <cctype>

namespace nesto {

Subset Subset::of(const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > kMaxGround)
            throw input_error("subset index " + std::to_string(i) + " outside [1,64]");
        std::uint64_t bit = std::uint64_t{1} << (i - 1);
        if (mask & bit) throw input_error("duplicate index " + std::to_string(i) + " in subset");
        mask |= bit;
    }
    return Subset(mask);
}

Subset Subset::ground(int m) {
    if (m < 1 || m > kMaxGround)
        throw input_error("ground size " + std::to_string(m) + " outside [1,64]");
    return Subset(m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

Subset Subset::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') throw input_error("subset must start with '{': " + text);
    ++pos;
    std::vector<int> indices;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw input_error("expected index in subset: " + text);
            indices.push_back(std::stoi(text.substr(start, pos - start)));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            if (pos < text.size() && text[pos] == '}') { ++pos; break; }
            throw input_error("malformed subset: " + text);
        }
    }
    skip_ws();
    if (pos != text.size()) throw input_error("trailing characters after subset: " + text);
    return Subset::of(indices);
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    std::uint64_t m = mask_;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::string Subset::str() const {
    std::string out = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace nesto
