#pragma once

#include <stdexcept>
#include <string>

namespace trmc {

enum class ErrorKind {
    Input,           // malformed data or violated precondition
    Arithmetic,      // division by zero, zero constant term, bad evaluation point
    Degenerate,      // coefficients not Delta-regular
    Reconstruction,  // no rational function of bounded degree fits
    Geometry,        // non-complete fan, non-coherent triangulation, ...
    Capacity,        // a configured size cap was exceeded
    Internal,        // an internal consistency check failed
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& w) : Error(ErrorKind::Arithmetic, w) {}
};
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& w) : Error(ErrorKind::Degenerate, w) {}
};
struct ReconstructionError : Error {
    explicit ReconstructionError(const std::string& w) : Error(ErrorKind::Reconstruction, w) {}
};
struct GeometryError : Error {
    explicit GeometryError(const std::string& w) : Error(ErrorKind::Geometry, w) {}
};
struct CapacityError : Error {
    explicit CapacityError(const std::string& w) : Error(ErrorKind::Capacity, w) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

}  // namespace trmc
