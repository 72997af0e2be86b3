// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hoikit/error.hpp"
#include "hoikit/io_util.hpp"

namespace hoikit {

struct ObjectCategory {
  int id = -1;
  std::string name;     // e.g. "bird"
  std::string article;  // "a" or "an"
};

struct VerbCategory {
  int id = -1;
  std::string gerund;  // e.g. "feeding", "sitting on"
};

// A verb-object combination. Interaction ids are positional: the index of
// the entry in the taxonomy file.
struct Interaction {
  int id = -1;
  int verb_id = -1;
  int object_id = -1;
  long train_count = 0;
};

// The interaction vocabulary: objects, verbs, valid verb-object pairs, and
// the per-object candidate list map. Immutable after construction.
class Taxonomy {
 public:
  Taxonomy(int human_object_id, std::vector<ObjectCategory> objects,
           std::vector<VerbCategory> verbs, std::vector<std::pair<std::pair<int, int>, long>> interactions)
      : human_object_id_(human_object_id), objects_(std::move(objects)), verbs_(std::move(verbs)) {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (!object_index_.emplace(objects_[i].id, i).second) {
        throw ValidationError("duplicate object id " + std::to_string(objects_[i].id));
      }
    }
    for (std::size_t i = 0; i < verbs_.size(); ++i) {
      if (!verb_index_.emplace(verbs_[i].id, i).second) {
        throw ValidationError("duplicate verb id " + std::to_string(verbs_[i].id));
      }
    }
    if (object_index_.find(human_object_id_) == object_index_.end()) {
      throw ValidationError("human_object_id " + std::to_string(human_object_id_) +
                            " is not an object category");
    }
    std::set<std::pair<int, int>> seen;
    interactions_.reserve(interactions.size());
    for (std::size_t i = 0; i < interactions.size(); ++i) {
      const auto [pair, count] = interactions[i];
      const auto [verb_id, object_id] = pair;
      if (verb_index_.find(verb_id) == verb_index_.end()) {
        throw ValidationError("interaction " + std::to_string(i) + " references unknown verb id " +
                              std::to_string(verb_id));
      }
      if (object_index_.find(object_id) == object_index_.end()) {
        throw ValidationError("interaction " + std::to_string(i) +
                              " references unknown object id " + std::to_string(object_id));
      }
      if (!seen.emplace(verb_id, object_id).second) {
        throw ValidationError("duplicate interaction (verb " + std::to_string(verb_id) +
                              ", object " + std::to_string(object_id) + ")");
      }
      interactions_.push_back({static_cast<int>(i), verb_id, object_id, count});
      theta_[object_id].push_back(static_cast<int>(i));  // ids ascend with i
    }
  }

  int human_object_id() const { return human_object_id_; }
  const std::vector<ObjectCategory>& objects() const { return objects_; }
  const std::vector<VerbCategory>& verbs() const { return verbs_; }
  const std::vector<Interaction>& interactions() const { return interactions_; }

  bool has_object(int id) const { return object_index_.count(id) > 0; }
  bool has_verb(int id) const { return verb_index_.count(id) > 0; }

  const ObjectCategory& object(int id) const {
    auto it = object_index_.find(id);
    if (it == object_index_.end()) {
      throw ValidationError("unknown object id " + std::to_string(id));
    }
    return objects_[it->second];
  }

  const VerbCategory& verb(int id) const {
    auto it = verb_index_.find(id);
    if (it == verb_index_.end()) {
      throw ValidationError("unknown verb id " + std::to_string(id));
    }
    return verbs_[it->second];
  }

  const Interaction& interaction(int id) const {
    if (id < 0 || id >= static_cast<int>(interactions_.size())) {
      throw ValidationError("unknown interaction id " + std::to_string(id));
    }
    return interactions_[static_cast<std::size_t>(id)];
  }

  // Interaction id for a (verb, object) pair, or -1 when the combination is
  // not part of the taxonomy.
  int find_interaction(int verb_id, int object_id) const {
    for (const auto& in : interactions_) {
      if (in.verb_id == verb_id && in.object_id == object_id) return in.id;
    }
    return -1;
  }

  // Theta: ordered candidate interactions of an object category. Empty for
  // objects that never interact.
  const std::vector<int>& theta(int object_id) const {
    static const std::vector<int> kEmpty;
    auto it = theta_.find(object_id);
    return it == theta_.end() ? kEmpty : it->second;
  }

  // "<gerund> <article> <object name>", e.g. "sitting on an airplane".
  std::string render_phrase(int verb_id, int object_id) const {
    const VerbCategory& v = verb(verb_id);
    const ObjectCategory& o = object(object_id);
    return v.gerund + " " + o.article + " " + o.name;
  }

  std::string render_interaction(int interaction_id) const {
    const Interaction& in = interaction(interaction_id);
    return render_phrase(in.verb_id, in.object_id);
  }

  static Taxonomy from_json(const json& j);
  static Taxonomy load(const std::filesystem::path& path) {
    return from_json(load_json_file(path));
  }
  json to_json() const;
  void save(const std::filesystem::path& path) const { atomic_write_json(path, to_json()); }

 private:
  int human_object_id_;
  std::vector<ObjectCategory> objects_;
  std::vector<VerbCategory> verbs_;
  std::vector<Interaction> interactions_;
  std::unordered_map<int, std::size_t> object_index_;
  std::unordered_map<int, std::size_t> verb_index_;
  std::map<int, std::vector<int>> theta_;
};

inline Taxonomy Taxonomy::from_json(const json& j) {
  const int human_id = field_as<int>(j, "human_object_id", "taxonomy");
  std::vector<ObjectCategory> objects;
  for (const auto& jo : require_field(j, "objects", "taxonomy")) {
    objects.push_back({field_as<int>(jo, "id", "taxonomy.objects"),
                       field_as<std::string>(jo, "name", "taxonomy.objects"),
                       field_as<std::string>(jo, "article", "taxonomy.objects")});
  }
  std::vector<VerbCategory> verbs;
  for (const auto& jv : require_field(j, "verbs", "taxonomy")) {
    verbs.push_back({field_as<int>(jv, "id", "taxonomy.verbs"),
                     field_as<std::string>(jv, "gerund", "taxonomy.verbs")});
  }
  std::vector<std::pair<std::pair<int, int>, long>> interactions;
  for (const auto& ji : require_field(j, "interactions", "taxonomy")) {
    interactions.push_back({{field_as<int>(ji, "verb_id", "taxonomy.interactions"),
                             field_as<int>(ji, "object_id", "taxonomy.interactions")},
                            field_as<long>(ji, "train_count", "taxonomy.interactions")});
  }
  return Taxonomy(human_id, std::move(objects), std::move(verbs), std::move(interactions));
}

inline json Taxonomy::to_json() const {
  json j;
  j["human_object_id"] = human_object_id_;
  j["objects"] = json::array();
  for (const auto& o : objects_) {
    j["objects"].push_back({{"id", o.id}, {"name", o.name}, {"article", o.article}});
  }
  j["verbs"] = json::array();
  for (const auto& v : verbs_) {
    j["verbs"].push_back({{"id", v.id}, {"gerund", v.gerund}});
  }
  j["interactions"] = json::array();
  for (const auto& in : interactions_) {
    j["interactions"].push_back(
        {{"verb_id", in.verb_id}, {"object_id", in.object_id}, {"train_count", in.train_count}});
  }
  return j;
}

}  // namespace hoikit
