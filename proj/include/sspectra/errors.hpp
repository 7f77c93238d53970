#pragma once

#include <stdexcept>
#include <string>

namespace sspectra {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroPolynomial : std::runtime_error {
    explicit ZeroPolynomial(const std::string& what) : std::runtime_error(what) {}
};
struct SingularCurve : std::runtime_error {
    explicit SingularCurve(const std::string& what) : std::runtime_error(what) {}
};
struct ModelNotRational : std::runtime_error {
    explicit ModelNotRational(const std::string& what) : std::runtime_error(what) {}
};
struct NotSupersingular : std::runtime_error {
    explicit NotSupersingular(const std::string& what) : std::runtime_error(what) {}
};
struct SplittingNotRational : std::runtime_error {
    explicit SplittingNotRational(const std::string& what) : std::runtime_error(what) {}
};
struct IrregularGraph : std::runtime_error {
    explicit IrregularGraph(const std::string& what) : std::runtime_error(what) {}
};
struct NotReversible : std::runtime_error {
    explicit NotReversible(const std::string& what) : std::runtime_error(what) {}
};
struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionTooSmall : std::runtime_error {
    explicit DimensionTooSmall(const std::string& what) : std::runtime_error(what) {}
};
struct ScaleExceeded : std::runtime_error {
    explicit ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct NotSpecialVertex : std::runtime_error {
    explicit NotSpecialVertex(const std::string& what) : std::runtime_error(what) {}
};
struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};
struct WalkLeftJacobianLocus : std::runtime_error {
    explicit WalkLeftJacobianLocus(const std::string& what) : std::runtime_error(what) {}
};
struct BadPrime : std::runtime_error {
    explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sspectra
