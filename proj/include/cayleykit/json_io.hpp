#ifndef CAYLEYKIT_JSON_IO_HPP_
#define CAYLEYKIT_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "cayleykit/coloring.hpp"
#include "cayleykit/diagram.hpp"
#include "cayleykit/simulate.hpp"

namespace ck {

using Json = nlohmann::ordered_json;

// {root, radius, vertices:[{id, word}], edges:[{u,v,label}]} in stable order
Json ball_json(const Ball& b);
std::string ball_dot(const Ball& b);

Json defect_json(const DefectReport& r);
Json diagram_json(const Diagram& d, const std::string& host_ref);
Json labelling_json(const Labelling& f);
Labelling labelling_from_json(const Json& j);
Json simreport_json(const SimReport& r);
Json epsilon_json(const EpsilonDefects& e);
Json parity_json(const ParityReport& r);
Json invariance_json(const InvarianceReport& r);

}  // namespace ck

#endif  // CAYLEYKIT_JSON_IO_HPP_
