#include "maxinfo/prob.hpp"

#include <cmath>
#include <utility>

namespace maxinfo {

namespace {

void check_mass_entry(double p, const char* what) {
  if (!std::isfinite(p) || p < -kProbTol || p > 1.0 + kProbTol) {
    fail(ErrorCode::validation_error,
         std::string(what) + " has a mass outside [0, 1]");
  }
}

void check_total(double total, const char* what) {
  if (std::fabs(total - 1.0) > kProbTol) {
    fail(ErrorCode::validation_error,
         std::string(what) + " mass sums to " + std::to_string(total) +
             ", deficit " + std::to_string(1.0 - total));
  }
}

}  // namespace

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    fail(ErrorCode::validation_error, "domain must have at least one label");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) {
      fail(ErrorCode::validation_error,
           "duplicate domain label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> Domain::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Domain::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found) {
    fail(ErrorCode::domain_mismatch,
         "label '" + std::string(label) + "' not in domain");
  }
  return *found;
}

DomainPtr make_domain(std::vector<std::string> labels) {
  return std::make_shared<const Domain>(std::move(labels));
}

PMF::PMF(DomainPtr domain, std::vector<double> mass)
    : domain_(std::move(domain)), mass_(std::move(mass)) {
  if (!domain_ || domain_->size() != mass_.size()) {
    fail(ErrorCode::domain_mismatch, "PMF mass size != domain size");
  }
  double total = 0;
  for (double p : mass_) {
    check_mass_entry(p, "PMF");
    total += p;
  }
  check_total(total, "PMF");
}

JointPMF::JointPMF(DomainPtr left, DomainPtr right, std::vector<double> mass)
    : left_(std::move(left)), right_(std::move(right)), mass_(std::move(mass)) {
  if (!left_ || !right_ || mass_.size() != left_->size() * right_->size()) {
    fail(ErrorCode::domain_mismatch, "JointPMF mass size != |left| * |right|");
  }
  const std::size_t nrows = left_->size();
  const std::size_t ncols = right_->size();
  left_marginal_.assign(nrows, 0.0);
  right_marginal_.assign(ncols, 0.0);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      const double p = mass_[i * ncols + j];
      check_mass_entry(p, "JointPMF");
      left_marginal_[i] += p;
      right_marginal_[j] += p;
      total_ += p;
      if (p > 0) ++support_;
    }
  }
  check_total(total_, "JointPMF");
}

MechanismKernel::MechanismKernel(DomainPtr input, DomainPtr output,
                                 std::vector<double> rows)
    : input_(std::move(input)), output_(std::move(output)),
      rows_(std::move(rows)) {
  if (!input_ || !output_ || rows_.size() != input_->size() * output_->size()) {
    fail(ErrorCode::domain_mismatch, "kernel size != |input| * |output|");
  }
  for (std::size_t i = 0; i < input_->size(); ++i) {
    double total = 0;
    for (std::size_t j = 0; j < output_->size(); ++j) {
      const double p = rows_[i * output_->size() + j];
      check_mass_entry(p, "kernel row");
      total += p;
    }
    check_total(total, "kernel row");
  }
}

DomainPtr enumerate_datasets(const Domain& marginal, std::size_t n,
                             std::size_t cap) {
  if (n == 0) fail(ErrorCode::param_out_of_range, "dataset length must be >= 1");
  const std::size_t base = marginal.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > cap / base) {
      fail(ErrorCode::cap_exceeded,
           "|X|^n exceeds enumeration cap " + std::to_string(cap));
    }
    count *= base;
  }
  std::vector<std::string> labels;
  labels.reserve(count);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::string label;
    for (std::size_t pos = 0; pos < n; ++pos) {
      label += marginal.label(digits[pos]);
    }
    labels.push_back(std::move(label));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++digits[pos] < base) break;
      digits[pos] = 0;
    }
  }
  return make_domain(std::move(labels));
}

std::vector<std::size_t> dataset_digits(std::size_t index, std::size_t n,
                                        std::size_t base) {
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t pos = n; pos-- > 0;) {
    digits[pos] = index % base;
    index /= base;
  }
  return digits;
}

std::size_t dataset_index(const std::vector<std::size_t>& digits,
                          std::size_t base) {
  std::size_t index = 0;
  for (std::size_t d : digits) index = index * base + d;
  return index;
}

PMF product_prior_pmf(const PMF& marginal, std::size_t n, std::size_t cap) {
  DomainPtr datasets = enumerate_datasets(marginal.domain(), n, cap);
  const std::size_t base = marginal.size();
  std::vector<double> mass(datasets->size());
  for (std::size_t idx = 0; idx < mass.size(); ++idx) {
    double p = 1.0;
    std::size_t rest = idx;
    for (std::size_t pos = 0; pos < n; ++pos) {
      // Digits from least significant; order does not matter for the product.
      p *= marginal.mass(rest % base);
      rest /= base;
    }
    mass[idx] = p;
  }
  return PMF(std::move(datasets), std::move(mass));
}

JointPMF joint_from_kernel(const PMF& prior, const MechanismKernel& kernel) {
  if (!(prior.domain() == kernel.input_domain())) {
    fail(ErrorCode::domain_mismatch,
         "prior domain differs from kernel input domain");
  }
  const std::size_t nrows = prior.size();
  const std::size_t ncols = kernel.outputs();
  std::vector<double> mass(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const double px = prior.mass(i);
    for (std::size_t j = 0; j < ncols; ++j) {
      mass[i * ncols + j] = px * kernel.prob(i, j);
    }
  }
  return JointPMF(prior.domain_ptr(), kernel.output_domain_ptr(),
                  std::move(mass));
}

JointPMF independent_copy(const JointPMF& joint) {
  const std::size_t nrows = joint.rows();
  const std::size_t ncols = joint.cols();
  std::vector<double> mass(nrows * ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      mass[i * ncols + j] = joint.left_marginal()[i] * joint.right_marginal()[j];
    }
  }
  return JointPMF(joint.left_domain_ptr(), joint.right_domain_ptr(),
                  std::move(mass));
}

}  // namespace maxinfo
