#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pdm/jet.hpp"

namespace pdm {

// Univariate factor evaluated as a 4th-order jet.
using Fun1 = std::function<Jet1(double)>;

// One separable term w * fx(x) * fy(y).
struct SepTerm {
    Fun1 fx;
    Fun1 fy;
    double w = 1.0;
};

// Finite sum of separable terms.  Every closed-form object in the model
// (eigenstates, zero modes, operator coefficients) has this shape, which keeps
// all partial derivatives exact: they reduce to univariate jets.
class SepSum {
  public:
    SepSum() = default;
    SepSum(std::string label, std::vector<SepTerm> terms)
        : label_(std::move(label)), terms_(std::move(terms)) {}

    const std::string& label() const { return label_; }
    const std::vector<SepTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Jet2 jet(double x, double y) const {
        Jet2 acc;
        acc.order = 4;
        for (const auto& t : terms_) acc = acc + t.w * jet_outer(t.fx(x), t.fy(y));
        return acc;
    }

    double value(double x, double y) const { return jet(x, y).value(); }

    // Linear combination; terms are concatenated with scaled weights.
    static SepSum combine(std::string label, const std::vector<std::pair<double, SepSum>>& parts) {
        std::vector<SepTerm> terms;
        for (const auto& [c, s] : parts) {
            if (c == 0.0) continue;
            for (const auto& t : s.terms()) terms.push_back({t.fx, t.fy, c * t.w});
        }
        return SepSum(std::move(label), std::move(terms));
    }

  private:
    std::string label_;
    std::vector<SepTerm> terms_;
};

// Lazily evaluated field: jet of requested order at a point.  Operator
// application wraps fields in closures, so composed operators pull exactly as
// many derivative orders from the source as they consume.
using Field2 = std::function<Jet2(double, double, int)>;

inline Field2 as_field(const SepSum& s) {
    return [s](double x, double y, int ord) {
        Jet2 j = s.jet(x, y);
        j.order = std::min(j.order, ord);
        return j;
    };
}

using Field1 = std::function<Jet1(double, int)>;

inline Field1 as_field1(Fun1 f) {
    return [f = std::move(f)](double x, int ord) {
        Jet1 j = f(x);
        j.order = std::min(j.order, ord);
        return j;
    };
}

}  // namespace pdm
