#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace kalvar {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (size_t k = 0; k < p_.size(); ++k) {
            if (p_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && p_[k] > p_[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// (h^w): w copies of h; empty when either is zero.
    static Partition rectangle(int h, int w) {
        if (h < 0 || w < 0) throw std::invalid_argument("negative rectangle");
        if (h == 0 || w == 0) return Partition{};
        return Partition(std::vector<int>(static_cast<size_t>(w), h));
    }

    const std::vector<int>& parts() const { return p_; }
    size_t length() const { return p_.size(); }
    int part(size_t k) const { return k < p_.size() ? p_[k] : 0; }

    int weight() const {
        int w = 0;
        for (int x : p_) w += x;
        return w;
    }

    /// Adds c to every one of `rows` leading parts (a full column block);
    /// parts beyond the current length start from zero.
    Partition shifted(int rows, int c) const {
        if (static_cast<size_t>(rows) < p_.size())
            throw std::invalid_argument("shift would break monotonicity");
        std::vector<int> q(static_cast<size_t>(rows), 0);
        for (size_t k = 0; k < p_.size(); ++k) q[k] = p_[k];
        for (auto& x : q) x += c;
        while (!q.empty() && q.back() == 0) q.pop_back();
        return Partition(std::move(q));
    }

    std::string str() const {
        if (p_.empty()) return "()";
        std::string out = "(";
        for (size_t k = 0; k < p_.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(p_[k]);
        }
        return out + ")";
    }

    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> p_;
};

}  // namespace kalvar
