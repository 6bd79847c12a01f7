#include "rootloci/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rootloci {

Partition::Partition(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("partition: empty input");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("partition: non-positive part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    parts_ = std::move(parts);
    d_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    evec_.assign(parts_.front(), 0);
    for (int p : parts_) ++evec_[p - 1];
}

Partition Partition::from_evec(const std::vector<int>& evec) {
    std::vector<int> parts;
    for (size_t i = 0; i < evec.size(); ++i) {
        if (evec[i] < 0) throw std::invalid_argument("partition: negative multiplicity");
        for (int c = 0; c < evec[i]; ++c) parts.push_back(int(i) + 1);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int d) {
    if (d < 1) throw std::invalid_argument("partitions_of: d must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int first = std::min(rem, maxp); first >= 1; --first) {
            cur.push_back(first);
            rec(rem - first, first);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

namespace {

int parse_positive(const std::string& tok, const char* what) {
    if (tok.empty()) throw std::invalid_argument(std::string("partition: malformed ") + what);
    size_t pos = 0;
    int val;
    try {
        val = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("partition: malformed ") + what);
    }
    if (pos != tok.size()) throw std::invalid_argument(std::string("partition: malformed ") + what);
    return val;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(sep, start);
        if (end == std::string::npos) end = s.size();
        out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

Partition parse_partition(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("partition: empty input");

    const bool exponent_form =
        t.find('^') != std::string::npos || t.find(' ') != std::string::npos;
    std::vector<int> parts;
    if (exponent_form) {
        for (const std::string& raw : split(t, ' ')) {
            std::string tok = strip(raw);
            if (tok.empty()) continue;
            size_t caret = tok.find('^');
            int base, mult = 1;
            if (caret == std::string::npos) {
                base = parse_positive(tok, "exponent syntax");
            } else {
                base = parse_positive(tok.substr(0, caret), "exponent syntax");
                mult = parse_positive(tok.substr(caret + 1), "exponent syntax");
                if (mult < 0) throw std::invalid_argument("partition: malformed exponent syntax");
            }
            if (base < 1) throw std::invalid_argument("partition: non-positive part");
            for (int c = 0; c < mult; ++c) parts.push_back(base);
        }
    } else {
        for (const std::string& raw : split(t, ',')) {
            std::string tok = strip(raw);
            int p = parse_positive(tok, "part");
            if (p < 1) throw std::invalid_argument("partition: non-positive part");
            parts.push_back(p);
        }
    }
    if (parts.empty()) throw std::invalid_argument("partition: empty input");
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace rootloci
