#pragma once

#include <complex>
#include <stdexcept>

namespace bloch {

using Complex = std::complex<double>;

/// A point of the open unit disk. Construction rejects |z| >= 1.
class DiskPoint {
public:
    DiskPoint() = default;

    explicit DiskPoint(Complex value) : value_(value)
    {
        if (!(std::norm(value) < 1.0)) {
            throw std::domain_error("point is not inside the open unit disk");
        }
    }

    DiskPoint(double re, double im = 0.0) : DiskPoint(Complex(re, im)) {}

    const Complex& value() const noexcept { return value_; }
    double abs() const noexcept { return std::abs(value_); }

    /// 1 - |z|^2 computed as (1 - |z|)(1 + |z|).
    double gap() const noexcept
    {
        const double r = std::abs(value_);
        return (1.0 - r) * (1.0 + r);
    }

    static bool contains(const Complex& z) noexcept { return std::norm(z) < 1.0; }

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    Complex value_{0.0, 0.0};
};

inline DiskPoint polar_point(double r, double theta)
{
    return DiskPoint(std::polar(r, theta));
}

} // namespace bloch
