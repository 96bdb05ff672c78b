#include "edis/analysis.hpp"

#include <sstream>

#include <json.hpp>

#include "edis/congruence.hpp"
#include "edis/errors.hpp"
#include "edis/qsemigroup.hpp"

namespace edis {

AnalysisReport analyze(FiniteInverseSemigroup const& s,
                       std::string const& input_descriptor,
                       bool with_reconstruction) {
  AnalysisReport r;
  r.input            = input_descriptor;
  r.order            = s.order();
  r.idempotent_count = s.num_idempotents();
  r.is_group         = s.is_group();
  r.is_semilattice   = s.is_semilattice();
  r.has_identity     = s.has_identity();
  r.has_zero         = s.has_zero();
  r.e_disjunctive    = is_E_disjunctive(s);
  r.e_unitary        = is_E_unitary(s);

  Partition   rho = syntactic_congruence(s);
  KernelTrace kt  = kernel_trace(s, rho);
  r.kernel         = kt.kernel;
  r.trace.resize(kt.idempotents.size());
  for (std::size_t i = 0; i < kt.idempotents.size(); ++i) {
    r.trace[i] = kt.trace.class_of(static_cast<int>(i));
  }
  r.quotient_order = rho.num_classes();

  if (with_reconstruction) {
    r.reconstruction_verified = reconstruct(s).verified;
  }

  // flag consistency
  if (r.is_group && !r.e_disjunctive) {
    throw Error("analysis: a group must be E-disjunctive");
  }
  if (r.is_semilattice && r.order >= 2 && r.e_disjunctive) {
    throw Error("analysis: a semilattice of order >= 2 cannot be"
                " E-disjunctive");
  }
  return r;
}

std::string report_to_json(AnalysisReport const& r) {
  nlohmann::json j;
  j["input"]            = r.input;
  j["order"]            = r.order;
  j["idempotent_count"] = r.idempotent_count;
  j["is_group"]         = r.is_group;
  j["is_semilattice"]   = r.is_semilattice;
  j["has_identity"]     = r.has_identity;
  j["has_zero"]         = r.has_zero;
  j["is_e_disjunctive"] = r.e_disjunctive;
  j["is_e_unitary"]     = r.e_unitary;
  j["syntactic"]        = {{"order", r.order},
                           {"is_e_disjunctive", r.e_disjunctive},
                           {"is_e_unitary", r.e_unitary},
                           {"kernel", r.kernel},
                           {"trace", r.trace},
                           {"quotient_order", r.quotient_order}};
  if (r.reconstruction_verified) {
    j["reconstruction_verified"] = *r.reconstruction_verified;
  }
  return j.dump(2);
}

std::string report_to_text(AnalysisReport const& r) {
  std::ostringstream os;
  os << "input:            " << r.input << "\n"
     << "order:            " << r.order << "\n"
     << "idempotents:      " << r.idempotent_count << "\n"
     << "group:            " << (r.is_group ? "yes" : "no") << "\n"
     << "semilattice:      " << (r.is_semilattice ? "yes" : "no") << "\n"
     << "identity:         " << (r.has_identity ? "yes" : "no") << "\n"
     << "zero:             " << (r.has_zero ? "yes" : "no") << "\n"
     << "E-disjunctive:    " << (r.e_disjunctive ? "yes" : "no") << "\n"
     << "E-unitary:        " << (r.e_unitary ? "yes" : "no") << "\n"
     << "max E-disjunctive quotient order: " << r.quotient_order << "\n";
  if (r.reconstruction_verified) {
    os << "reconstruction verified: "
       << (*r.reconstruction_verified ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace edis
