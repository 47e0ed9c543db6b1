#ifndef DISCOCAT_STORE_HPP_
#define DISCOCAT_STORE_HPP_

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "discocat/tensor.hpp"

namespace discocat {

// Labelled tensors of one rank (1 or 2) over a single space, persisted as TSV:
//
//   # tensor-store v1 rank=<r> dim=<d>
//   label <TAB> v1 <TAB> ... <TAB> vd          (rank 1)
//   label <TAB> i <TAB> j <TAB> value          (rank 2, zero entries omitted)
class TensorTable {
 public:
  TensorTable(std::size_t rank, Space space);

  static TensorTable read(std::istream& in, const std::string& spaceName = "N");
  static TensorTable load(const std::string& path, const std::string& spaceName = "N");
  void write(std::ostream& out) const;
  void save(const std::string& path) const;

  void put(const std::string& label, Tensor tensor);
  bool contains(const std::string& label) const { return entries_.count(label) > 0; }
  const Tensor& at(const std::string& label) const;
  const std::map<std::string, Tensor>& entries() const { return entries_; }
  std::size_t rank() const { return rank_; }
  const Space& space() const { return space_; }

 private:
  std::size_t rank_;
  Space space_;
  std::map<std::string, Tensor> entries_;
};

// A model directory: noun/word context vectors, transitive verb matrices,
// intransitive verb vectors and an optional learned ownership map.
class VectorStore {
 public:
  static constexpr const char* kOwnershipLabel = "'s";

  explicit VectorStore(Space space);

  static VectorStore load(const std::string& directory);
  void save(const std::string& directory) const;

  const Space& space() const { return space_; }
  TensorTable& vectors() { return vectors_; }
  const TensorTable& vectors() const { return vectors_; }
  TensorTable& verbs() { return verbs_; }
  const TensorTable& verbs() const { return verbs_; }
  TensorTable& intransitiveVerbs() { return intransitive_; }
  const TensorTable& intransitiveVerbs() const { return intransitive_; }

  void setOwnership(Tensor matrix);
  const std::optional<Tensor>& ownership() const { return ownership_; }

  bool isVerb(const std::string& lemma) const {
    return verbs_.contains(lemma) || intransitive_.contains(lemma);
  }

 private:
  Space space_;
  TensorTable vectors_;
  TensorTable verbs_;
  TensorTable intransitive_;
  std::optional<Tensor> ownership_;
};

}  // namespace discocat

#endif  // DISCOCAT_STORE_HPP_
