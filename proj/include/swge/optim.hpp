// Copyright 2026 The swge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWGE_OPTIM_HPP
#define SWGE_OPTIM_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace swge {

/// Adam over a flat parameter vector.
class Adam {
public:
    explicit Adam(std::size_t size, double rate = 0.01, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
        : m_(size, 0.0), v_(size, 0.0), rate_(rate), beta1_(beta1), beta2_(beta2), eps_(eps) {}

    void step(std::span<double> params, std::span<const double> grad) {
        ++t_;
        const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
        const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
        for (std::size_t i = 0; i < params.size(); ++i) {
            m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grad[i];
            v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grad[i] * grad[i];
            params[i] -= rate_ * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + eps_);
        }
    }

private:
    std::vector<double> m_;
    std::vector<double> v_;
    double rate_;
    double beta1_;
    double beta2_;
    double eps_;
    std::size_t t_ = 0;
};

} // namespace swge

#endif // SWGE_OPTIM_HPP
