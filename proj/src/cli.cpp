#include "tkt/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tkt/arcpres.hpp"
#include "tkt/braid.hpp"
#include "tkt/foliation.hpp"
#include "tkt/invariants.hpp"
#include "tkt/laurent.hpp"
#include "tkt/search.hpp"

namespace tkt {

namespace {

ArcPresentation load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadParameters", "cannot open grid file " + path);
  return parse_grid(in);
}

FoliatedSurface load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadParameters", "cannot open surface file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_surface_text(buf.str());
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"transverse knot toolkit: braids, arc presentations, braid foliations"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  // invariants
  auto* inv = app.add_subcommand("invariants", "braid invariants or a curve transversality check");
  std::string inv_braid, inv_curve;
  double inv_eps = 0.0;
  inv->add_option("--braid", inv_braid);
  inv->add_option("--curve", inv_curve, "file of 'rho theta z' lines");
  inv->add_option("--eps", inv_eps, "strictness margin for the transversality check");

  // convert
  auto* conv = app.add_subcommand("convert", "convert between braids and grid presentations");
  std::string conv_braid, conv_grid, conv_to = "braid", conv_side = "braid";
  conv->add_option("--braid", conv_braid);
  conv->add_option("--grid", conv_grid);
  conv->add_option("--to", conv_to)->check(CLI::IsMember({"braid", "grid"}));
  conv->add_option("--side", conv_side)->check(CLI::IsMember({"braid", "antibraid"}));

  // apply
  auto* ap = app.add_subcommand("apply", "apply a move to a braid or grid presentation");
  std::string ap_braid, ap_grid, ap_move, ap_endpoint = "tail", ap_variant = "a";
  int ap_sign = 1, ap_split = 0, ap_r = 1, ap_by = 1, ap_arc = 0, ap_height = 1, ap_j = 1, ap_k = 1;
  ap->add_option("--braid", ap_braid);
  ap->add_option("--grid", ap_grid);
  ap->add_option("--move", ap_move)->required();
  ap->add_option("--sign", ap_sign);
  ap->add_option("--split", ap_split);
  ap->add_option("--r", ap_r);
  ap->add_option("--by", ap_by);
  ap->add_option("--arc", ap_arc);
  ap->add_option("--endpoint", ap_endpoint)->check(CLI::IsMember({"tail", "head"}));
  ap->add_option("--variant", ap_variant)->check(CLI::IsMember({"a", "b"}));
  ap->add_option("--height", ap_height);
  ap->add_option("--j", ap_j);
  ap->add_option("--k", ap_k);

  // certify
  auto* cert = app.add_subcommand("certify", "search for a move-trace equivalence certificate");
  std::string cert_kind, cert_a, cert_b;
  SearchBounds bounds;
  cert->add_option("kind", cert_kind)->required()->check(CLI::IsMember({"transverse", "topological", "arc"}));
  cert->add_option("--a", cert_a)->required();
  cert->add_option("--b", cert_b)->required();
  cert->add_option("--max-strands", bounds.max_strands);
  cert->add_option("--max-length", bounds.max_length);
  cert->add_option("--max-nodes", bounds.max_nodes);

  // foliate
  auto* fol = app.add_subcommand("foliate", "build or simplify foliated annuli");
  std::string fol_build, fol_load;
  bool fol_simplify = false;
  fol->add_option("--build", fol_build, "k,m,p,q checkerboard parameters");
  fol->add_option("--load", fol_load, "surface file");
  fol->add_flag("--simplify", fol_simplify);

  // render
  auto* ren = app.add_subcommand("render", "ascii renderings");
  std::string ren_grid, ren_surface;
  bool ren_ascii = true;
  ren->add_flag("--ascii", ren_ascii);
  ren->add_option("--grid", ren_grid);
  ren->add_option("--surface", ren_surface);

  std::vector<const char*> argv;
  std::string prog = "tkt";
  argv.push_back(prog.c_str());
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*inv) {
      if (!inv_curve.empty()) {
        std::ifstream in(inv_curve);
        if (!in) fail("BadParameters", "cannot open curve file " + inv_curve);
        std::vector<CylPoint> curve;
        double rho, theta, z;
        while (in >> rho >> theta >> z) curve.push_back({rho, theta, z});
        auto r = transversality_check(curve, inv_eps);
        if (format == "machine")
          out << "transverse=" << (r.transverse ? "true" : "false") << "\nwitness="
              << r.witness_segment << "\n";
        else
          out << "transverse=" << (r.transverse ? "true" : "false")
              << " witness=" << r.witness_segment << "\n";
        return 0;
      }
      if (inv_braid.empty()) {
        err << "usage error: invariants needs --braid or --curve\n";
        return 2;
      }
      BraidWord w = parse_braid(inv_braid);
      std::string alex = closure_is_knot(w) ? alexander(w).to_string() : "NotAKnot";
      if (format == "machine")
        out << "e=" << exponent_sum(w) << "\nn=" << w.strands << "\nsl=" << self_linking(w)
            << "\nalexander=" << alex << "\n";
      else
        out << "e=" << exponent_sum(w) << " n=" << w.strands << " sl=" << self_linking(w)
            << " alexander=" << alex << "\n";
      return 0;
    }

    if (*conv) {
      if (conv_to == "braid") {
        if (conv_grid.empty()) {
          err << "usage error: convert --to braid needs --grid\n";
          return 2;
        }
        BraidWord w = associated_braid(
            load_grid(conv_grid), conv_side == "braid" ? BraidSide::Braid : BraidSide::AntiBraid);
        out << braid_to_text(w) << "\n";
      } else {
        if (conv_braid.empty()) {
          err << "usage error: convert --to grid needs --braid\n";
          return 2;
        }
        out << grid_to_text(braid_to_arcpres(parse_braid(conv_braid)));
      }
      return 0;
    }

    if (*ap) {
      if (!ap_braid.empty()) {
        BraidWord w = parse_braid(ap_braid);
        BraidWord r;
        if (ap_move == "stabilize")
          r = stabilize(w, ap_sign);
        else if (ap_move == "destabilize")
          r = destabilize(w).word;
        else if (ap_move == "exchange")
          r = exchange_move(w, ap_split);
        else if (ap_move == "cyclic")
          r = cyclic_permute(w, ap_r);
        else if (ap_move == "conjugate")
          r = apply_step(w, MoveStep(MoveKind::Conjugate, {ap_by}));
        else
          fail("BadParameters", "unknown braid move " + ap_move);
        out << braid_to_text(r) << "\n";
      } else {
        ArcPresentation g = load_grid(ap_grid);
        ArcPresentation r;
        if (ap_move == "cromwell-I-stab")
          r = cromwell_I_stabilize(g, ap_arc,
                                   ap_endpoint == "tail" ? ArcEndpoint::Tail : ArcEndpoint::Head,
                                   ap_variant[0]);
        else if (ap_move == "cromwell-I-destab")
          r = cromwell_I_destabilize(g, ap_height);
        else if (ap_move == "cromwell-II")
          r = cromwell_II(g, ap_j);
        else if (ap_move == "cromwell-III")
          r = cromwell_III(g, ap_k);
        else
          fail("BadParameters", "unknown grid move " + ap_move);
        out << grid_to_text(r);
      }
      return 0;
    }

    if (*cert) {
      if (cert_kind == "arc") {
        ArcPresentation a1 = load_grid(cert_a), a2 = load_grid(cert_b);
        auto t = certify_arc_equiv(a1, a2, bounds);
        if (!t) {
          err << "NotFound nodes=" << last_search_nodes() << "\n";
          return 1;
        }
        out << "start: " << grid_to_text(t->start);
        for (size_t i = 0; i < t->steps.size(); ++i) {
          out << "step " << i << ": " << t->steps[i].kind;
          for (int p : t->steps[i].params) out << " " << p;
          out << " transverse=true\n";
        }
        out << "end: " << grid_to_text(t->end);
        out << "nodes=" << last_search_nodes() << "\n";
        return 0;
      }
      BraidWord w1 = parse_braid(cert_a), w2 = parse_braid(cert_b);
      auto t = cert_kind == "transverse" ? certify_transverse_equiv(w1, w2, bounds)
                                         : certify_topological_equiv(w1, w2, bounds);
      if (!t) {
        err << "NotFound nodes=" << last_search_nodes() << "\n";
        return 1;
      }
      out << trace_to_text(*t);
      out << "nodes=" << last_search_nodes() << "\n";
      return 0;
    }

    if (*fol) {
      FoliatedSurface s;
      if (!fol_build.empty()) {
        int k, m, p, q;
        char c;
        std::istringstream ss(fol_build);
        if (!(ss >> k >> c >> m >> c >> p >> c >> q))
          fail("BadParameters", "expected --build k,m,p,q");
        s = build_checkerboard_annulus(k, m, p, q);
      } else if (!fol_load.empty()) {
        s = load_surface(fol_load);
      } else {
        err << "usage error: foliate needs --build or --load\n";
        return 2;
      }
      if (fol_simplify) {
        auto [simplified, trace] = simplify_annulus(s);
        for (size_t i = 0; i < trace.steps.size(); ++i) {
          out << "step " << i << ": " << trace.steps[i].rule;
          for (int id : trace.steps[i].ids) out << " " << id;
          out << " dV=" << trace.steps[i].dV << " dS=" << trace.steps[i].dS << "\n";
        }
        if (!trace.stopped_reason.empty()) out << "stopped: " << trace.stopped_reason << "\n";
        out << surface_to_text(simplified);
      } else {
        out << surface_to_text(s);
      }
      return 0;
    }

    if (*ren) {
      if (!ren_grid.empty())
        out << render_grid_ascii(load_grid(ren_grid));
      else if (!ren_surface.empty())
        out << render_surface_ascii(load_surface(ren_surface));
      else {
        err << "usage error: render needs --grid or --surface\n";
        return 2;
      }
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace tkt
