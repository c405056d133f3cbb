#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xtp/polyring/poly.hpp"

namespace xtp {

// An integer-indexed sequence of polynomials: an explicit list starting at a
// given index, a closed form in a level indeterminate, or a generator.
class CoeffSeq {
public:
    CoeffSeq() = default;

    static CoeffSeq list(std::vector<Poly> values, long first_index = 0);
    // at(i) = form with level_var := i - shift.
    static CoeffSeq closed_form(Poly form, VarId level_var, long shift = 0);
    static CoeffSeq closed_form(Poly form, std::string_view level_var, long shift = 0);
    static CoeffSeq generator(std::function<Poly(long)> fn, std::string description);
    static CoeffSeq constant(const Poly& value);

    // Throws std::out_of_range outside an explicit list.
    [[nodiscard]] Poly at(long i) const;
    [[nodiscard]] bool defined_at(long i) const;
    [[nodiscard]] std::string describe() const;

    // Pointwise specialization of parameters.
    [[nodiscard]] CoeffSeq specialize(const Assignment& values) const;

private:
    enum class Kind { List, Form, Generator };
    Kind kind_ = Kind::List;
    std::vector<Poly> values_;
    long first_ = 0;
    Poly form_;
    VarId var_ = 0;
    long shift_ = 0;
    std::function<Poly(long)> fn_;
    std::string description_;
};

}  // namespace xtp
