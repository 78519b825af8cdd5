#include "imprec/grade.hpp"

#include <algorithm>

#include "imprec/errors.hpp"

namespace imprec {

Grade Grade::single(const std::string& name, int arity) {
  return of({ChoiceSite{name, arity}});
}

Grade Grade::of(std::vector<ChoiceSite> sites) {
  for (const auto& s : sites) {
    if (s.arity < 2) throw DomainError("choice site arity must be >= 2");
    if (s.name.empty()) throw DomainError("choice site name must be nonempty");
  }
  std::sort(sites.begin(), sites.end());
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (sites[i].name == sites[i - 1].name)
      throw NameClashError("duplicate choice name: " + sites[i].name);
  Grade g;
  g.sites_ = std::move(sites);
  return g;
}

bool Grade::contains(const std::string& name) const {
  for (const auto& s : sites_)
    if (s.name == name) return true;
  return false;
}

int Grade::arity_of(const std::string& name) const {
  for (const auto& s : sites_)
    if (s.name == name) return s.arity;
  throw DomainError("grade has no site named " + name);
}

long long Grade::carrier() const {
  long long c = 1;
  for (const auto& s : sites_) c *= s.arity;
  return c;
}

FinSetObj Grade::carrier_obj() const { return FinSetObj(static_cast<int>(carrier())); }

bool Grade::disjoint_with(const Grade& o) const {
  for (const auto& s : sites_)
    if (o.contains(s.name)) return false;
  return true;
}

Grade Grade::disjoint_union(const Grade& a, const Grade& b) {
  for (const auto& s : a.sites_)
    if (b.contains(s.name))
      throw NameClashError("choice name used twice in sequence: " + s.name);
  auto sites = a.sites_;
  sites.insert(sites.end(), b.sites_.begin(), b.sites_.end());
  return of(std::move(sites));
}

Grade Grade::merge_union(const Grade& a, const Grade& b) {
  auto sites = a.sites_;
  for (const auto& s : b.sites_) {
    if (a.contains(s.name)) {
      if (a.arity_of(s.name) != s.arity)
        throw NameClashError("choice name " + s.name + " used with conflicting arities");
    } else {
      sites.push_back(s);
    }
  }
  return of(std::move(sites));
}

bool Grade::contains_all(const Grade& sub) const {
  for (const auto& s : sub.sites_)
    if (!contains(s.name) || arity_of(s.name) != s.arity) return false;
  return true;
}

std::vector<int> Grade::decode(long long index) const {
  std::vector<int> values(sites_.size());
  for (std::size_t i = sites_.size(); i-- > 0;) {
    values[i] = static_cast<int>(index % sites_[i].arity);
    index /= sites_[i].arity;
  }
  return values;
}

long long Grade::encode(const std::vector<int>& values) const {
  if (values.size() != sites_.size()) throw ShapeError("assignment length differs from grade");
  long long index = 0;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (values[i] < 0 || values[i] >= sites_[i].arity)
      throw DomainError("assignment value out of range");
    index = index * sites_[i].arity + values[i];
  }
  return index;
}

long long Grade::restrict_index(const Grade& sub, long long index) const {
  if (!contains_all(sub)) throw GradeMismatchError("restriction target is not a subgrade");
  const auto values = decode(index);
  std::vector<int> sub_values(sub.sites_.size());
  for (std::size_t k = 0; k < sub.sites_.size(); ++k) {
    for (std::size_t i = 0; i < sites_.size(); ++i) {
      if (sites_[i].name == sub.sites_[k].name) {
        sub_values[k] = values[i];
        break;
      }
    }
  }
  return sub.encode(sub_values);
}

GradeMap::GradeMap(Grade src, Grade dst, StochMatrix matrix)
    : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(matrix)) {
  if (matrix_.dom_size() != src_.carrier() || matrix_.cod_size() != dst_.carrier())
    throw ShapeError("grade map matrix shape differs from carriers");
  if (!is_surjective(matrix_))
    throw DomainError("grade maps must be surjective stochastic matrices");
}

GradeMap GradeMap::identity(const Grade& g) {
  return GradeMap(g, g, StochMatrix::identity(g.carrier_obj()));
}

GradeMap GradeMap::projection(const Grade& from, const Grade& onto) {
  if (!from.contains_all(onto))
    throw GradeMismatchError("projection target is not a subgrade");
  std::vector<int> image(static_cast<std::size_t>(from.carrier()));
  for (long long w = 0; w < from.carrier(); ++w)
    image[static_cast<std::size_t>(w)] = static_cast<int>(from.restrict_index(onto, w));
  return GradeMap(from, onto,
                  StochMatrix::from_function(from.carrier_obj(), onto.carrier_obj(), image));
}

GradeMap GradeMap::site_permutation(const Grade& g, const std::string& site,
                                    const std::vector<int>& perm) {
  const int arity = g.arity_of(site);
  if (static_cast<int>(perm.size()) != arity) throw DomainError("permutation length differs from arity");
  std::vector<bool> seen(static_cast<std::size_t>(arity), false);
  for (int v : perm) {
    if (v < 0 || v >= arity || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation of the site's values");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::size_t pos = 0;
  while (g.sites()[pos].name != site) ++pos;
  std::vector<int> image(static_cast<std::size_t>(g.carrier()));
  for (long long w = 0; w < g.carrier(); ++w) {
    auto values = g.decode(w);
    values[pos] = perm[static_cast<std::size_t>(values[pos])];
    image[static_cast<std::size_t>(w)] = static_cast<int>(g.encode(values));
  }
  return GradeMap(g, g, StochMatrix::from_function(g.carrier_obj(), g.carrier_obj(), image));
}

GradeMap GradeMap::flip(const Grade& g, const std::string& site) {
  if (g.arity_of(site) != 2) throw DomainError("flip is defined for binary sites only");
  return site_permutation(g, site, {1, 0});
}

GradeMap GradeMap::rename_induced(const Grade& src, const Grade& dst,
                                  const std::map<std::string, std::string>& rename) {
  std::vector<int> image(static_cast<std::size_t>(src.carrier()));
  for (long long w = 0; w < src.carrier(); ++w) {
    const auto values = src.decode(w);
    std::vector<int> dst_values(dst.sites().size());
    for (std::size_t k = 0; k < dst.sites().size(); ++k) {
      const auto& d = dst.sites()[k];
      const auto it = rename.find(d.name);
      if (it == rename.end()) throw DomainError("no source site for " + d.name);
      if (src.arity_of(it->second) != d.arity)
        throw DomainError("renaming changes the arity of " + d.name);
      std::size_t pos = 0;
      while (src.sites()[pos].name != it->second) ++pos;
      dst_values[k] = values[pos];
    }
    image[static_cast<std::size_t>(w)] = static_cast<int>(dst.encode(dst_values));
  }
  return GradeMap(src, dst,
                  StochMatrix::from_function(src.carrier_obj(), dst.carrier_obj(), image));
}

}  // namespace imprec
