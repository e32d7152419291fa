#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "setsched/instance.hpp"
#include "setsched/schedule.hpp"

namespace setsched {

// Rationals travel as "p/q" strings so every tool in the chain stays exact.

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["machines"] = inst.machine_count;
  j["classes"] = nlohmann::json::array();
  for (const JobClass& c : inst.classes) j["classes"].push_back({{"setup", c.setup.str()}});
  j["jobs"] = nlohmann::json::array();
  for (const Job& job : inst.jobs)
    j["jobs"].push_back({{"class", job.class_index}, {"time", job.processing.str()}});
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  inst.machine_count = j.at("machines").get<int>();
  for (const auto& c : j.at("classes"))
    inst.classes.push_back({Rational::parse(c.at("setup").get<std::string>())});
  for (const auto& job : j.at("jobs"))
    inst.jobs.push_back(
        {job.at("class").get<int>(), Rational::parse(job.at("time").get<std::string>())});
  inst.check();
  return inst;
}

inline nlohmann::json schedule_to_json(const Schedule& sched) {
  nlohmann::json j;
  j["machines"] = nlohmann::json::array();
  for (const auto& machine : sched.machines) {
    nlohmann::json segs = nlohmann::json::array();
    for (const Segment& seg : machine) {
      nlohmann::json s;
      s["kind"] = seg.kind == Segment::Kind::Setup ? "setup" : "piece";
      s["class"] = seg.class_index;
      if (seg.kind == Segment::Kind::Piece) s["job"] = seg.job_index;
      s["start"] = seg.start.str();
      s["end"] = seg.end.str();
      segs.push_back(std::move(s));
    }
    j["machines"].push_back(std::move(segs));
  }
  return j;
}

inline Schedule schedule_from_json(const nlohmann::json& j) {
  Schedule sched;
  int machine = 0;
  for (const auto& segs : j.at("machines")) {
    for (const auto& s : segs) {
      Segment seg;
      std::string kind = s.at("kind").get<std::string>();
      if (kind == "setup")
        seg.kind = Segment::Kind::Setup;
      else if (kind == "piece")
        seg.kind = Segment::Kind::Piece;
      else
        throw std::invalid_argument("schedule: unknown segment kind '" + kind + "'");
      seg.class_index = s.at("class").get<int>();
      if (seg.kind == Segment::Kind::Piece) seg.job_index = s.at("job").get<int>();
      seg.start = Rational::parse(s.at("start").get<std::string>());
      seg.end = Rational::parse(s.at("end").get<std::string>());
      sched.add(machine, std::move(seg));
    }
    ++machine;
  }
  sched.machines.resize(static_cast<size_t>(machine));  // keep trailing empty machines
  return sched;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

inline Instance load_instance(const std::string& path) {
  return instance_from_json(nlohmann::json::parse(read_file(path)));
}

inline Schedule load_schedule(const std::string& path) {
  return schedule_from_json(nlohmann::json::parse(read_file(path)));
}

inline void save_instance(const std::string& path, const Instance& inst) {
  write_file(path, instance_to_json(inst).dump(2) + "\n");
}

inline void save_schedule(const std::string& path, const Schedule& sched) {
  write_file(path, schedule_to_json(sched).dump(2) + "\n");
}

}  // namespace setsched
