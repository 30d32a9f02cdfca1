#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcf/linalg.hpp"
#include "rcf/poly.hpp"

namespace rcf {

enum class FieldKind { Quadratic, Biquadratic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A quadratic field Q(sqrt D) or an imaginary biquadratic field
/// Q(sqrt -d, sqrt -n) with a fixed integral basis.
///
/// Power coordinates: {1, sqrt D} for quadratic fields and
/// {1, u, v, w} with u = sqrt -d, v = sqrt -n, w = u*v for biquadratic ones.
/// Elements are stored in integral-basis coordinates.
class Field {
  public:
    /// D squarefree, D != 0, 1.
    static FieldPtr quadratic(const Int & D);
    /// d != n positive squarefree. Without an explicit basis the ring of
    /// integers is computed by saturation; an explicit basis (rows in power
    /// coordinates) is verified for ring closure and maximality.
    static FieldPtr biquadratic(const Int & d, const Int & n, const std::optional<RatMat> & basis = std::nullopt);

    FieldKind kind() const { return kind_; }
    int degree() const { return r_; }
    const Int & D() const { return D_; }
    const Int & d() const { return d_; }
    const Int & n() const { return n_; }
    bool totally_imaginary() const { return kind_ == FieldKind::Biquadratic || D_ < 0; }

    /// Rows are integral-basis elements in power coordinates.
    const RatMat & basis() const { return basis_; }
    const RatMat & basis_inv() const { return basis_inv_; }
    /// Integral-basis coordinates of b_i * b_j.
    const IntVec & table(int i, int j) const { return table_[i][j]; }
    const Int & disc() const { return disc_; }
    /// T2 Gram matrix in integral-basis coordinates.
    const RatMat & t2() const { return t2_; }
    /// T2 Gram matrix in power coordinates.
    const RatMat & t2_power() const { return t2_power_; }
    /// True when the Marcus-type basis applied directly (biquadratic only).
    bool native_basis() const { return native_basis_; }

    RatVec mul_power(const RatVec & a, const RatVec & b) const;
    RatVec to_power(const RatVec & c) const { return vec_mat(c, basis_); }
    RatVec from_power(const RatVec & p) const { return vec_mat(p, basis_inv_); }

    std::string name() const;
    std::string power_name(int i) const;

    bool operator==(const Field & o) const;

  private:
    Field() = default;
    void finish();

    FieldKind kind_ = FieldKind::Quadratic;
    int r_ = 2;
    Int D_, d_, n_;
    RatMat basis_, basis_inv_;
    std::vector<std::vector<IntVec>> table_;
    Int disc_;
    RatMat t2_, t2_power_;
    bool native_basis_ = false;
};

/// Element of a Field in integral-basis coordinates.
class Elem {
  public:
    Elem() = default;
    Elem(FieldPtr F, RatVec coords);
    static Elem zero(FieldPtr F);
    static Elem one(FieldPtr F);
    static Elem integer(FieldPtr F, const Rat & a);
    static Elem from_power(FieldPtr F, const RatVec & p);
    /// Integral basis element b_i.
    static Elem basis(FieldPtr F, int i);

    const FieldPtr & field() const { return F_; }
    const RatVec & coords() const { return c_; }
    const Rat & operator[](std::size_t i) const { return c_[i]; }
    RatVec power() const { return F_->to_power(c_); }

    bool is_zero() const;
    bool is_integral() const;

    friend Elem operator+(const Elem & a, const Elem & b);
    friend Elem operator-(const Elem & a, const Elem & b);
    friend Elem operator-(const Elem & a);
    friend Elem operator*(const Elem & a, const Elem & b);
    friend Elem operator*(const Rat & s, const Elem & a);
    friend Elem operator/(const Elem & a, const Elem & b);
    friend bool operator==(const Elem & a, const Elem & b);
    friend bool operator!=(const Elem & a, const Elem & b) { return !(a == b); }
    Elem pow(long e) const;
    Elem inverse() const;

    /// Matrix of multiplication by this element: row i = coords of (this * b_i).
    RatMat mult_matrix() const;
    Rat norm() const;
    Rat trace() const;
    /// Characteristic polynomial over Q, monic, constant term first.
    RatVec charpoly() const;
    /// T2 = sum over embeddings of |sigma(x)|^2.
    Rat t2() const;

    std::string to_string() const;

  private:
    FieldPtr F_;
    RatVec c_;
};

/// Characteristic polynomial of a square rational matrix (Faddeev-LeVerrier).
RatVec charpoly(const RatMat & m);

/// Integral-basis coordinates of the product of two coordinate vectors.
RatVec mul_coords(const Field & F, const RatVec & a, const RatVec & b);

} // namespace rcf
