#include "lctkit/serialize.hpp"

#include <json.hpp>

namespace lctkit {

using nlohmann::json;

namespace {

json interval_to_json(const Interval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

Interval interval_from_json(const json& j) {
    return Interval{Rational::parse(j.at("lo").get<std::string>()), Rational::parse(j.at("hi").get<std::string>()),
                    j.at("lo_open").get<bool>(), j.at("hi_open").get<bool>()};
}

json sequence_to_json(const MonotoneSequence& s) {
    return json{{"p", s.p().str()},
                {"q", s.q().str()},
                {"r", s.r().str()},
                {"s", s.s().str()},
                {"n0", MonotoneSequence::n0().str()},
                {"direction", s.direction() == Direction::increasing ? "increasing" : "decreasing"}};
}

MonotoneSequence sequence_from_json(const json& j) {
    MonotoneSequence seq(Int(j.at("p").get<std::string>()), Int(j.at("q").get<std::string>()),
                         Int(j.at("r").get<std::string>()), Int(j.at("s").get<std::string>()),
                         Int(j.at("n0").get<std::string>()));
    std::string dir = j.at("direction").get<std::string>();
    std::string actual = seq.direction() == Direction::increasing ? "increasing" : "decreasing";
    if (dir != actual) throw std::domain_error("sequence document: declared direction does not match coefficients");
    return seq;
}

}  // namespace

std::string to_json(const ThresholdSet& set) {
    json points = json::array();
    for (const Rational& x : set.points()) points.push_back(x.str());
    json seqs = json::array();
    for (const MonotoneSequence& s : set.sequences()) seqs.push_back(sequence_to_json(s));
    json doc{{"ambient", interval_to_json(set.ambient())}, {"points", points}, {"sequences", seqs}};
    return doc.dump();
}

ThresholdSet threshold_set_from_json(const std::string& text) {
    json doc = json::parse(text);
    std::vector<Rational> points;
    for (const auto& p : doc.at("points")) points.push_back(Rational::parse(p.get<std::string>()));
    std::vector<MonotoneSequence> seqs;
    for (const auto& s : doc.at("sequences")) seqs.push_back(sequence_from_json(s));
    return ThresholdSet(std::move(points), std::move(seqs), interval_from_json(doc.at("ambient")));
}

std::string to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const Rational& x : values) arr.push_back(x.str());
    return arr.dump();
}

}  // namespace lctkit
