#include "eforder/ordercount.hpp"

namespace eforder {

FixSystem fix_matrix(const WeylElement& w, const WeightSystem& ws) {
  if (w.group != ws.group) throw std::invalid_argument("fix_matrix: group mismatch");
  std::vector<IntRowVec> rows;
  for (int i : ws.spanning) {
    int s = w.sigma(i);
    if (s == i) continue;
    if (s == -i)
      rows.push_back(IntRowVec(2 * ws.vec(i)));
    else if (s > 0)
      rows.push_back(IntRowVec(ws.vec(i) - ws.vec(s)));
    else
      rows.push_back(IntRowVec(ws.vec(i) + ws.vec(-s)));
  }
  FixSystem fs;
  fs.matrix = stack_rows(rows, rank(ws.group));
  fs.divisors = elementary_divisors(fs.matrix);
  return fs;
}

Int fix_count(const WeylElement& w, const WeightSystem& ws, const Int& m) {
  FixSystem fs = fix_matrix(w, ws);
  return kernel_count_from_divisors(fs.divisors, rank(ws.group), m);
}

OrderCounter::OrderCounter(GroupType g, ConjugacyClassTable table)
    : group_(g), table_(std::move(table)) {
  const WeightSystem& ws = weight_system(g);
  for (const ConjugacyClass& c : table_.classes)
    systems_.push_back(fix_matrix(c.representative, ws));
}

Int OrderCounter::n_gm(const Int& m) const {
  if (m < 1) throw std::invalid_argument("n_gm: m must be >= 1");
  const Eigen::Index l = rank(group_);
  Int sum = 0;
  for (size_t i = 0; i < table_.classes.size(); ++i)
    sum += table_.classes[i].size *
           kernel_count_from_divisors(systems_[i].divisors, l, m);
  Int order = static_cast<unsigned long>(weyl_order(group_));
  if (sum % order != 0)
    throw DataIntegrityError("n_gm: Burnside sum not divisible by |W| (corrupt class data?)");
  return sum / order;
}

QuasiPolynomial OrderCounter::n_gm_quasipoly() const {
  return fit([this](long m) { return n_gm(m); }, rank(group_), ngm_period(group_));
}

Int n_gm(GroupType g, const Int& m, const std::string& data_dir) {
  OrderCounter counter(g, conjugacy_classes(g, ClassTableMode::kEmbedded, data_dir));
  return counter.n_gm(m);
}

}  // namespace eforder
