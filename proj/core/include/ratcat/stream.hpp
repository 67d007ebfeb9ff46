#pragma once

#include <functional>
#include <iterator>
#include <optional>
#include <utility>

namespace ratcat {

/// Single-pass lazy sequence. Values are pulled one at a time from a
/// generator callable; nothing is materialized up front.
///
///   for (const DyckPath& p : enumerate_dyck(shape)) { ... }
///
/// A stream may be iterated once. Copies share nothing but the generator's
/// captured state at the time of the copy.
template <class T>
class Stream {
 public:
  using value_type = T;
  using Generator = std::function<std::optional<T>()>;

  explicit Stream(Generator pull) : pull_(std::move(pull)) {}

  std::optional<T> next() { return pull_(); }

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(Stream* owner) : owner_(owner) { advance(); }

    const T& operator*() const { return *current_; }
    const T* operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    void advance() { current_ = owner_->next(); }

    Stream* owner_ = nullptr;
    std::optional<T> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Generator pull_;
};

}  // namespace ratcat
