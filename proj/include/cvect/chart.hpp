/*
   Copyright 2026 the cvect authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cvect {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((int(a) + int(b)) % 2);
}

/// Sign (-1)^{p(a) p(b)} of the super sign rule.
inline int sign_of(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/// An ordered coordinate chart: even variables first, then odd ones, each
/// with an integer grading weight.  Variables are addressed by their index
/// in that combined order.
class Chart {
public:
    Chart() = default;
    Chart(std::vector<std::string> even_names, std::vector<std::string> odd_names,
          std::vector<int> weights = {}) {
        auto d = std::make_shared<Data>();
        d->even = std::move(even_names);
        d->odd = std::move(odd_names);
        if (weights.empty()) weights.assign(d->even.size() + d->odd.size(), 1);
        if (weights.size() != d->even.size() + d->odd.size())
            throw DomainError("chart: weight map size mismatch");
        d->weights = std::move(weights);
        data_ = std::move(d);
    }

    /// The (4|3) chart (u1,u2,u3,y | x1,x2,x3), all weights 1.
    static const Chart& dim43() {
        static const Chart c({"u1", "u2", "u3", "y"}, {"x1", "x2", "x3"});
        return c;
    }

    /// The (3|3) chart (u1,u2,u3 | x1,x2,x3), all weights 1.
    static const Chart& dim33() {
        static const Chart c({"u1", "u2", "u3"}, {"x1", "x2", "x3"});
        return c;
    }

    int n_even() const { return int(data_->even.size()); }
    int n_odd() const { return int(data_->odd.size()); }
    int n_vars() const { return n_even() + n_odd(); }

    bool is_odd(int var) const { return var >= n_even(); }
    Parity parity(int var) const { return is_odd(var) ? Parity::odd : Parity::even; }
    /// Index of an odd variable within the odd block (0-based).
    int odd_index(int var) const { return var - n_even(); }

    const std::string& name(int var) const {
        return is_odd(var) ? data_->odd[var - n_even()] : data_->even[var];
    }
    int weight(int var) const { return data_->weights[var]; }

    /// Variable index by name, or -1.
    int find(const std::string& name) const {
        for (int v = 0; v < n_vars(); ++v)
            if (this->name(v) == name) return v;
        return -1;
    }

    friend bool operator==(const Chart& a, const Chart& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->even == b.data_->even && a.data_->odd == b.data_->odd &&
               a.data_->weights == b.data_->weights;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    struct Data {
        std::vector<std::string> even, odd;
        std::vector<int> weights;
    };
    std::shared_ptr<const Data> data_;
};

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (a != b) throw ChartMismatch();
}

}  // namespace cvect
