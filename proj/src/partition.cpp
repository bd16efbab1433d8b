#include "syncon/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "syncon/error.hpp"

namespace syncon {

  namespace {

    template <typename T>
    void canonical(std::span<T const> labels,
                        std::vector<std::size_t>& out,
                        std::size_t&              num_classes) {
      std::unordered_map<T, std::size_t> seen;
      out.resize(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = seen.try_emplace(labels[i], seen.size());
        out[i]              = it->second;
      }
      num_classes = seen.size();
    }

  }  // namespace

  Partition Partition::from_labels(std::span<std::size_t const> labels) {
    Partition p;
    canonical(labels, p.class_of_, p.num_classes_);
    return p;
  }

  Partition Partition::from_labels(std::span<Element const> labels) {
    Partition p;
    canonical(labels, p.class_of_, p.num_classes_);
    return p;
  }

  Partition Partition::discrete(std::size_t n) {
    Partition p;
    p.class_of_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.class_of_[i] = i;
    }
    p.num_classes_ = n;
    return p;
  }

  Partition Partition::universal(std::size_t n) {
    Partition p;
    p.class_of_.assign(n, 0);
    p.num_classes_ = n == 0 ? 0 : 1;
    return p;
  }

  Partition Partition::of_subset(Subset const& subset) {
    std::vector<std::size_t> labels(subset.carrier_size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      labels[i] = subset.contains(static_cast<Element>(i)) ? 1 : 0;
    }
    return from_labels(std::span<std::size_t const>(labels));
  }

  Partition Partition::kernel(std::span<Element const> map) {
    return from_labels(map);
  }

  Partition Partition::from_classes(std::size_t                              n,
                                    std::vector<std::vector<Element>> const& classes) {
    constexpr auto           unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) {
        throw DomainError("partition has an empty class");
      }
      for (auto a : classes[c]) {
        if (a >= n) {
          throw DomainError("partition element " + std::to_string(a)
                            + " is out of range for a set of size "
                            + std::to_string(n));
        }
        if (labels[a] != unset) {
          throw DomainError("partition classes overlap at element "
                            + std::to_string(a));
        }
        labels[a] = c;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (labels[a] == unset) {
        throw DomainError("partition does not cover element " + std::to_string(a));
      }
    }
    return from_labels(std::span<std::size_t const>(labels));
  }

  Partition Partition::parse(std::string_view text) {
    std::vector<std::vector<Element>> classes;
    std::size_t                       i    = 0;
    auto                              fail = [&](std::string const& what) {
      throw DomainError("partition '" + std::string(text) + "': " + what);
    };
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    Element max_elem = 0;
    skip();
    while (i < text.size()) {
      if (text[i] != '{') {
        fail("expected '{'");
      }
      ++i;
      std::vector<Element> cls;
      skip();
      while (i < text.size() && text[i] != '}') {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (start == i) {
          fail("expected an element index");
        }
        auto v = static_cast<Element>(std::stoul(std::string(text.substr(start, i - start))));
        cls.push_back(v);
        max_elem = std::max(max_elem, v);
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip();
        }
      }
      if (i >= text.size()) {
        fail("expected '}'");
      }
      ++i;
      classes.push_back(std::move(cls));
      skip();
      if (i < text.size()) {
        if (text[i] != '/') {
          fail("expected '/'");
        }
        ++i;
        skip();
      }
    }
    if (classes.empty()) {
      fail("no classes");
    }
    return from_classes(static_cast<std::size_t>(max_elem) + 1, classes);
  }

  std::vector<std::vector<Element>> Partition::classes() const {
    std::vector<std::vector<Element>> out(num_classes_);
    for (std::size_t a = 0; a < class_of_.size(); ++a) {
      out[class_of_[a]].push_back(static_cast<Element>(a));
    }
    return out;
  }

  std::vector<Element> Partition::representatives() const {
    std::vector<Element> out(num_classes_);
    std::vector<bool>    seen(num_classes_, false);
    for (std::size_t a = 0; a < class_of_.size(); ++a) {
      if (!seen[class_of_[a]]) {
        seen[class_of_[a]] = true;
        out[class_of_[a]]  = static_cast<Element>(a);
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& coarser) const {
    if (coarser.size() != size()) {
      return false;
    }
    constexpr auto           unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> target(num_classes_, unset);
    for (std::size_t a = 0; a < class_of_.size(); ++a) {
      auto& t = target[class_of_[a]];
      if (t == unset) {
        t = coarser.class_of_[a];
      } else if (t != coarser.class_of_[a]) {
        return false;
      }
    }
    return true;
  }

  bool Partition::saturates(Subset const& subset) const {
    if (subset.carrier_size() != size()) {
      throw DomainError("subset and partition have different carrier sizes");
    }
    std::vector<int> state(num_classes_, -1);
    for (std::size_t a = 0; a < class_of_.size(); ++a) {
      int in = subset.contains(static_cast<Element>(a)) ? 1 : 0;
      int& s = state[class_of_[a]];
      if (s == -1) {
        s = in;
      } else if (s != in) {
        return false;
      }
    }
    return true;
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    bool               first_class = true;
    for (auto const& cls : classes()) {
      os << (first_class ? "" : "/") << '{';
      first_class = false;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        os << (i == 0 ? "" : ",") << cls[i];
      }
      os << '}';
    }
    return os.str();
  }

  Partition meet(Partition const& p, Partition const& q) {
    if (p.size() != q.size()) {
      throw DomainError("meet of partitions of different sizes");
    }
    std::vector<std::size_t> labels(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      labels[a] = p.class_of(static_cast<Element>(a)) * q.num_classes()
                  + q.class_of(static_cast<Element>(a));
    }
    return Partition::from_labels(std::span<std::size_t const>(labels));
  }

  std::vector<Partition> all_partitions(std::size_t n) {
    if (n > 10) {
      throw DomainError("refusing to enumerate partitions of a set of size "
                        + std::to_string(n));
    }
    std::vector<Partition> out;
    if (n == 0) {
      out.push_back(Partition::discrete(0));
      return out;
    }
    // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
      out.push_back(Partition::from_labels(std::span<std::size_t const>(rgs)));
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[j - 1];
      }
    }
    return out;
  }

  Partition coarsest_stable_refinement(Partition                             initial,
                                       std::span<std::vector<Element> const> maps) {
    auto const n = initial.size();
    for (auto const& f : maps) {
      if (f.size() != n) {
        throw DomainError("map of length " + std::to_string(f.size())
                          + " applied to a partition of size " + std::to_string(n));
      }
    }
    Partition current = std::move(initial);
    bool      changed = true;
    std::vector<std::size_t> labels(n);
    while (changed) {
      changed = false;
      for (auto const& f : maps) {
        for (std::size_t a = 0; a < n; ++a) {
          labels[a] = current.class_of(static_cast<Element>(a)) * current.num_classes()
                      + current.class_of(f[a]);
        }
        auto next = Partition::from_labels(std::span<std::size_t const>(labels));
        if (next.num_classes() != current.num_classes()) {
          current = std::move(next);
          changed = true;
        }
      }
    }
    return current;
  }

  PairWitness first_difference(Partition const& p, Partition const& q) {
    if (p.size() != q.size()) {
      throw DomainError("comparing partitions of different sizes");
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        auto ea = static_cast<Element>(a);
        auto eb = static_cast<Element>(b);
        if (p.same_class(ea, eb) != q.same_class(ea, eb)) {
          return {true, ea, eb};
        }
      }
    }
    return {};
  }

}  // namespace syncon
