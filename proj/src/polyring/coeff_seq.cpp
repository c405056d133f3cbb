#include "xtp/polyring/coeff_seq.hpp"

#include <stdexcept>

namespace xtp {

CoeffSeq CoeffSeq::list(std::vector<Poly> values, long first_index) {
    CoeffSeq s;
    s.kind_ = Kind::List;
    s.values_ = std::move(values);
    s.first_ = first_index;
    return s;
}

CoeffSeq CoeffSeq::closed_form(Poly form, VarId level_var, long shift) {
    CoeffSeq s;
    s.kind_ = Kind::Form;
    s.form_ = std::move(form);
    s.var_ = level_var;
    s.shift_ = shift;
    return s;
}

CoeffSeq CoeffSeq::closed_form(Poly form, std::string_view level_var, long shift) {
    if (!form.context()) return constant(form);
    const VarId v = form.context()->index(level_var);
    return closed_form(std::move(form), v, shift);
}

CoeffSeq CoeffSeq::generator(std::function<Poly(long)> fn, std::string description) {
    CoeffSeq s;
    s.kind_ = Kind::Generator;
    s.fn_ = std::move(fn);
    s.description_ = std::move(description);
    return s;
}

CoeffSeq CoeffSeq::constant(const Poly& value) {
    return generator([value](long) { return value; }, value.str());
}

bool CoeffSeq::defined_at(long i) const {
    if (kind_ != Kind::List) return true;
    return i >= first_ && i - first_ < static_cast<long>(values_.size());
}

Poly CoeffSeq::at(long i) const {
    switch (kind_) {
        case Kind::List:
            if (!defined_at(i)) {
                throw std::out_of_range("CoeffSeq: index " + std::to_string(i) + " outside explicit list");
            }
            return values_[static_cast<std::size_t>(i - first_)];
        case Kind::Form:
            if (!form_.context() || !form_.mentions(var_)) return form_;
            return form_.specialize(var_, Rational(static_cast<long long>(i - shift_)));
        case Kind::Generator:
            return fn_(i);
    }
    return Poly();
}

std::string CoeffSeq::describe() const {
    switch (kind_) {
        case Kind::List: {
            std::string out = "[";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i != 0) out += ", ";
                out += values_[i].str();
            }
            return out + "]";
        }
        case Kind::Form:
            return form_.str();
        case Kind::Generator:
            return description_;
    }
    return {};
}

CoeffSeq CoeffSeq::specialize(const Assignment& values) const {
    switch (kind_) {
        case Kind::List: {
            std::vector<Poly> out;
            out.reserve(values_.size());
            for (const auto& v : values_) out.push_back(v.specialize(values));
            return list(std::move(out), first_);
        }
        case Kind::Form:
            return closed_form(form_.specialize(values), var_, shift_);
        case Kind::Generator: {
            auto fn = fn_;
            return generator([fn, values](long i) { return fn(i).specialize(values); }, description_);
        }
    }
    return *this;
}

}  // namespace xtp
