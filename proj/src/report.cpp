#include "coringlab/report.hpp"

#include <sstream>

namespace coringlab {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 0; i < 16; ++i) out[15 - i] = digits[(value >> (4 * i)) & 0xf];
    return out;
}

void VerdictReport::pass(std::string name, std::string details) {
    lines.push_back({true, true, std::move(name), std::move(details)});
}

void VerdictReport::fail(std::string name, std::string details) {
    lines.push_back({false, true, std::move(name), std::move(details)});
}

void VerdictReport::note(std::string name, std::string details) {
    lines.push_back({true, false, std::move(name), std::move(details)});
}

std::size_t VerdictReport::failed() const {
    std::size_t n = 0;
    for (const auto& l : lines)
        if (l.verdict && !l.pass) ++n;
    return n;
}

std::string VerdictReport::render() const {
    std::ostringstream os;
    os << tool_version << "\n";
    os << "input " << digest << "\n";
    for (const auto& c : context) os << c << "\n";
    std::size_t checks = 0;
    for (const auto& l : lines) {
        if (l.verdict) {
            ++checks;
            os << (l.pass ? "PASS " : "FAIL ") << l.name;
        } else {
            os << "note " << l.name;
        }
        if (!l.details.empty()) os << ": " << l.details;
        os << "\n";
    }
    os << "verdict: " << (checks - failed()) << " passed, " << failed() << " failed\n";
    return os.str();
}

} // namespace coringlab
