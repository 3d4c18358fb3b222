#include "hive/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hive {

bool is_dominant(std::span<const int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!is_dominant(parts_)) {
        std::ostringstream os;
        os << "not a non-negative dominant sequence: (";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        throw std::invalid_argument(os.str());
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const {
    std::vector<int> out = parts_;
    if (out.size() < n) out.resize(n, 0);
    return out;
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > (*this)[i]) return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    return os << ')';
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (text.find_first_not_of(" \t,") == std::string::npos) break;
            throw std::invalid_argument("empty part in partition '" + text + "'");
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + item + "' in partition '" + text + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad integer '" + item + "' in partition '" + text + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Remaining mass must fit in the remaining parts, each at most p.
        if (static_cast<long long>(p) * parts_left < remaining) break;
        cur.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d, int max_parts) {
    std::vector<Partition> out;
    if (d < 0 || max_parts < 0) return out;
    std::vector<int> cur;
    partitions_rec(d, d, max_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int d, int max_parts) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto level = partitions_of(k, max_parts);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Partition sum(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.length(), b.length());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i) parts[i] = a[i] + b[i];
    return Partition(std::move(parts));
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool dominated_by(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    std::size_t len = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("skew shape " + to_string(outer) + "/" + to_string(inner) +
                                    ": inner diagram is not contained in outer");
}

} // namespace hive
