#pragma once

#include "hk/carrier.hpp"

#include <memory>

namespace hk {

/// Direct sum of system carriers with componentwise structure.  The tangible
/// set follows the chosen option:
///   1  diagonal scalars (all components equal and tangible; not a triple)
///   2  disjoint union: exactly one nonzero component, tangible there
///   3  product of T0: all components tangible or zero, not all zero
enum class DirectSumOption { Diagonal = 1, Disjoint = 2, Product = 3 };

class DirectSumCarrier : public InternedCarrier<std::vector<Elem>> {
public:
    DirectSumCarrier(std::vector<std::shared_ptr<Carrier>> parts, DirectSumOption opt);

    std::string name() const override;
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override;
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    bool window_closed(int v) const override;
    bool finite() const override;
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    Elem tuple(const std::vector<Elem>& components) { return intern(components); }
    std::size_t arity() const { return parts_.size(); }

private:
    std::vector<std::shared_ptr<Carrier>> parts_;
    DirectSumOption opt_;
    Elem zero_;
    std::optional<Elem> one_;
};

/// Monomials as exponent vectors; total degree bounded by the carrier cap.
using Monomial = std::vector<int>;

/// Polynomial convolution system over a base system: finite-support maps
/// monomial -> coefficient, truncated at a total-degree cap; products past
/// the cap raise ResourceError.  T is the set of monomials with tangible
/// coefficient.
class PolyCarrier
    : public InternedCarrier<std::vector<std::pair<Monomial, Elem>>> {
public:
    PolyCarrier(std::shared_ptr<Carrier> base, int nvars, int degcap);

    std::string name() const override;
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return base_->total_mul(); }
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string&) override { return std::nullopt; }

    Elem monomial(const Monomial& m, Elem coeff);
    Elem constant(Elem coeff) { return monomial(Monomial(nvars_, 0), coeff); }
    std::optional<Elem> coeff_at(Elem a, const Monomial& m) const;
    Carrier& base() { return *base_; }

private:
    std::shared_ptr<Carrier> base_;
    int nvars_;
    int degcap_;
    Elem zero_, one_;
};

/// Matrix convolution system M_n over a base system: entrywise addition,
/// matrix product, T the matrices with at most one nonzero entry which is
/// tangible; the identity is a unit but not tangible; not cancellative for
/// n >= 2.
class MatrixCarrier : public InternedCarrier<std::vector<Elem>> {
public:
    MatrixCarrier(std::shared_ptr<Carrier> base, int n);

    std::string name() const override;
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return base_->total_mul(); }
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string&) override { return std::nullopt; }

    int dim() const { return n_; }
    Elem matrix(const std::vector<Elem>& entries) { return intern(entries); }
    Elem unit_matrix(int i, int j, Elem v);
    Elem entry(Elem a, int i, int j) const { return enc(a)[i * n_ + j]; }
    Carrier& base() { return *base_; }

private:
    std::shared_ptr<Carrier> base_;
    int n_;
    Elem zero_, one_;
};

} // namespace hk
