// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hoikit/io_util.hpp"
#include "hoikit/pairing.hpp"
#include "hoikit/taxonomy.hpp"

namespace hoikit {

struct ImageDetections {
  std::string id;
  int width = 0;
  int height = 0;
  std::vector<Detection> detections;
};

struct ImageGroundTruth {
  std::string id;
  int width = 0;
  int height = 0;
  std::vector<GroundTruthTriplet> triplets;
};

namespace detail {

inline BBox corner_box_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != 4) {
    throw ValidationError("expected [x1,y1,x2,y2] array in " + where);
  }
  double c[4];
  for (int i = 0; i < 4; ++i) {
    if (!arr[i].is_number()) throw ValidationError("non-numeric box coordinate in " + where);
    c[i] = arr[i].get<double>();
  }
  try {
    return BBox::from_corners(c[0], c[1], c[2], c[3]);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(e.what()) + " in " + where);
  }
}

inline json corner_box_to_json(const BBox& b) {
  return json::array({b.x1(), b.y1(), b.x2(), b.y2()});
}

}  // namespace detail

// Detector output files. Boxes are stored corner-form in absolute pixels and
// converted to center form on the way in. Unknown categories and degenerate
// boxes are reported with the image id they came from.
inline std::vector<ImageDetections> parse_detections(const json& j, const Taxonomy& taxonomy) {
  std::vector<ImageDetections> out;
  for (const auto& ji : require_field(j, "images", "detections")) {
    ImageDetections rec;
    rec.id = field_as<std::string>(ji, "id", "detections.images");
    const std::string where = "detections.images[\"" + rec.id + "\"]";
    rec.width = field_as<int>(ji, "width", where);
    rec.height = field_as<int>(ji, "height", where);
    for (const auto& jd : require_field(ji, "detections", where)) {
      Detection d;
      d.box = detail::corner_box_from_json(require_field(jd, "bbox", where), where);
      d.category = field_as<int>(jd, "category_id", where);
      d.score = field_as<double>(jd, "score", where);
      if (!taxonomy.has_object(d.category)) {
        throw ValidationError("unknown category_id " + std::to_string(d.category) + " in " + where);
      }
      if (d.score < 0.0 || d.score > 1.0) {
        throw ValidationError("detection score " + std::to_string(d.score) +
                              " outside [0,1] in " + where);
      }
      rec.detections.push_back(d);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<ImageDetections> load_detections(const std::filesystem::path& path,
                                                    const Taxonomy& taxonomy) {
  return parse_detections(load_json_file(path), taxonomy);
}

inline json detections_to_json(const std::vector<ImageDetections>& images) {
  json j;
  j["images"] = json::array();
  for (const auto& rec : images) {
    json ji;
    ji["id"] = rec.id;
    ji["width"] = rec.width;
    ji["height"] = rec.height;
    ji["detections"] = json::array();
    for (const auto& d : rec.detections) {
      ji["detections"].push_back({{"bbox", detail::corner_box_to_json(d.box)},
                                  {"category_id", d.category},
                                  {"score", d.score}});
    }
    j["images"].push_back(std::move(ji));
  }
  return j;
}

inline void save_detections(const std::filesystem::path& path,
                            const std::vector<ImageDetections>& images) {
  atomic_write_json(path, detections_to_json(images));
}

inline std::vector<ImageGroundTruth> parse_ground_truth(const json& j, const Taxonomy& taxonomy) {
  std::vector<ImageGroundTruth> out;
  for (const auto& ji : require_field(j, "images", "ground truth")) {
    ImageGroundTruth rec;
    rec.id = field_as<std::string>(ji, "id", "ground_truth.images");
    const std::string where = "ground_truth.images[\"" + rec.id + "\"]";
    rec.width = field_as<int>(ji, "width", where);
    rec.height = field_as<int>(ji, "height", where);
    for (const auto& jt : require_field(ji, "triplets", where)) {
      GroundTruthTriplet t;
      t.human_box = detail::corner_box_from_json(require_field(jt, "human_bbox", where), where);
      t.object_box = detail::corner_box_from_json(require_field(jt, "object_bbox", where), where);
      t.object_id = field_as<int>(jt, "object_id", where);
      t.verb_id = field_as<int>(jt, "verb_id", where);
      if (taxonomy.find_interaction(t.verb_id, t.object_id) < 0) {
        throw ValidationError("(verb " + std::to_string(t.verb_id) + ", object " +
                              std::to_string(t.object_id) + ") is not a taxonomy interaction in " +
                              where);
      }
      rec.triplets.push_back(t);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<ImageGroundTruth> load_ground_truth(const std::filesystem::path& path,
                                                       const Taxonomy& taxonomy) {
  return parse_ground_truth(load_json_file(path), taxonomy);
}

inline json ground_truth_to_json(const std::vector<ImageGroundTruth>& images) {
  json j;
  j["images"] = json::array();
  for (const auto& rec : images) {
    json ji;
    ji["id"] = rec.id;
    ji["width"] = rec.width;
    ji["height"] = rec.height;
    ji["triplets"] = json::array();
    for (const auto& t : rec.triplets) {
      ji["triplets"].push_back({{"human_bbox", detail::corner_box_to_json(t.human_box)},
                                {"object_bbox", detail::corner_box_to_json(t.object_box)},
                                {"object_id", t.object_id},
                                {"verb_id", t.verb_id}});
    }
    j["images"].push_back(std::move(ji));
  }
  return j;
}

inline void save_ground_truth(const std::filesystem::path& path,
                              const std::vector<ImageGroundTruth>& images) {
  atomic_write_json(path, ground_truth_to_json(images));
}

}  // namespace hoikit
