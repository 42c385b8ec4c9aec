#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "maxinfo/errors.hpp"

namespace maxinfo {

// Validation tolerance for probability mass sums.
inline constexpr double kProbTol = 1e-12;

// Default cap on enumerated dataset spaces (|X|^n).
inline constexpr std::size_t kDefaultEnumCap = std::size_t{1} << 24;

// Ordered finite set of distinct labels. Immutable after construction.
class Domain {
 public:
  explicit Domain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;

  bool operator==(const Domain& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_domain(std::vector<std::string> labels);

// Probability mass function over a Domain.
class PMF {
 public:
  PMF(DomainPtr domain, std::vector<double> mass);

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domain_ptr() const { return domain_; }
  std::size_t size() const { return mass_.size(); }
  double mass(std::size_t i) const { return mass_[i]; }
  const std::vector<double>& masses() const { return mass_; }

 private:
  DomainPtr domain_;
  std::vector<double> mass_;
};

// Exact joint distribution over (left, right) pairs, stored dense row-major.
class JointPMF {
 public:
  JointPMF(DomainPtr left, DomainPtr right, std::vector<double> mass);

  const Domain& left_domain() const { return *left_; }
  const Domain& right_domain() const { return *right_; }
  const DomainPtr& left_domain_ptr() const { return left_; }
  const DomainPtr& right_domain_ptr() const { return right_; }

  std::size_t rows() const { return left_->size(); }
  std::size_t cols() const { return right_->size(); }
  double mass(std::size_t i, std::size_t j) const {
    return mass_[i * cols() + j];
  }
  const std::vector<double>& masses() const { return mass_; }

  const std::vector<double>& left_marginal() const { return left_marginal_; }
  const std::vector<double>& right_marginal() const { return right_marginal_; }
  double total() const { return total_; }
  std::size_t support_size() const { return support_; }

 private:
  DomainPtr left_;
  DomainPtr right_;
  std::vector<double> mass_;
  std::vector<double> left_marginal_;
  std::vector<double> right_marginal_;
  double total_ = 0;
  std::size_t support_ = 0;
};

// Conditional output distribution per input: one PMF row per input label.
class MechanismKernel {
 public:
  MechanismKernel(DomainPtr input, DomainPtr output, std::vector<double> rows);

  const Domain& input_domain() const { return *input_; }
  const Domain& output_domain() const { return *output_; }
  const DomainPtr& input_domain_ptr() const { return input_; }
  const DomainPtr& output_domain_ptr() const { return output_; }

  std::size_t inputs() const { return input_->size(); }
  std::size_t outputs() const { return output_->size(); }
  double prob(std::size_t input, std::size_t output) const {
    return rows_[input * outputs() + output];
  }
  const double* row(std::size_t input) const {
    return rows_.data() + input * outputs();
  }

 private:
  DomainPtr input_;
  DomainPtr output_;
  std::vector<double> rows_;
};

// All n-tuples over the marginal domain, lexicographic in label order, with
// the first tuple position most significant. Tuple labels are the
// concatenation of the element labels.
DomainPtr enumerate_datasets(const Domain& marginal, std::size_t n,
                             std::size_t cap = kDefaultEnumCap);

// Index <-> digit-vector maps for the enumeration above.
std::vector<std::size_t> dataset_digits(std::size_t index, std::size_t n,
                                        std::size_t base);
std::size_t dataset_index(const std::vector<std::size_t>& digits,
                          std::size_t base);

// Product prior P^n over the enumerated dataset space.
PMF product_prior_pmf(const PMF& marginal, std::size_t n,
                      std::size_t cap = kDefaultEnumCap);

// Law of (X, A(X)) for X ~ prior and A given by the kernel.
JointPMF joint_from_kernel(const PMF& prior, const MechanismKernel& kernel);

// Product of the two marginals, X (x) Z.
JointPMF independent_copy(const JointPMF& joint);

}  // namespace maxinfo
