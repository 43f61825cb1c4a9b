#include "semilat/blowup.hpp"

#include <algorithm>
#include <functional>

#include "semilat/error.hpp"
#include "semilat/extensions.hpp"

namespace semilat {

BlowupLabel BlowupLabel::original(std::string text) {
  auto node = std::make_shared<Node>();
  node->text = std::move(text);
  return BlowupLabel(std::move(node));
}

BlowupLabel BlowupLabel::marked(const BlowupLabel& alpha,
                                const BlowupLabel& base) {
  auto node = std::make_shared<Node>();
  node->text = "[" + alpha.node_->text + "," + base.node_->text + "]";
  node->alpha = alpha.node_;
  node->base = base.node_;
  return BlowupLabel(std::move(node));
}

BlowupLabel BlowupLabel::alpha_part() const { return BlowupLabel(node_->alpha); }
BlowupLabel BlowupLabel::base_part() const { return BlowupLabel(node_->base); }

bool operator==(const BlowupLabel& a, const BlowupLabel& b) {
  std::function<bool(const BlowupLabel::Node*, const BlowupLabel::Node*)> eq =
      [&](const BlowupLabel::Node* x, const BlowupLabel::Node* y) {
        if (!x || !y) return x == y;
        if ((x->alpha == nullptr) != (y->alpha == nullptr)) return false;
        if (!x->alpha) return x->text == y->text;
        return eq(x->alpha.get(), y->alpha.get()) &&
               eq(x->base.get(), y->base.get());
      };
  return eq(a.node_.get(), b.node_.get());
}

BlowupResult combinatorial_blowup(const SemiLattice& l, int alpha,
                                  const std::vector<BlowupLabel>* prior) {
  if (alpha == l.bottom())
    throw Error("AlphaIsBottom", "cannot blow up the bottom element");

  std::vector<BlowupLabel> in_labels;
  if (prior) {
    in_labels = *prior;
  } else {
    for (int x = 0; x < l.size(); ++x)
      in_labels.push_back(BlowupLabel::original(l.label(x)));
  }

  BlowupResult r;
  r.alpha = alpha;
  std::vector<int> old_id(l.size(), -1), marked_id(l.size(), -1);
  std::vector<std::string> labels;

  for (int y = 0; y < l.size(); ++y) {
    if (l.leq(alpha, y)) continue;  // y >= alpha vanishes
    old_id[y] = int(labels.size());
    labels.push_back(in_labels[y].text());
    r.labels.push_back(in_labels[y]);
    r.old_of.push_back(y);
    r.marked_of.push_back(-1);
  }
  for (int y = 0; y < l.size(); ++y) {
    if (l.leq(alpha, y) || !l.join(y, alpha)) continue;
    marked_id[y] = int(labels.size());
    BlowupLabel lbl = BlowupLabel::marked(in_labels[alpha], in_labels[y]);
    labels.push_back(lbl.text());
    r.labels.push_back(lbl);
    r.old_of.push_back(-1);
    r.marked_of.push_back(y);
  }

  const int n = int(labels.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      int yp = r.old_of[p] >= 0 ? r.old_of[p] : r.marked_of[p];
      int yq = r.old_of[q] >= 0 ? r.old_of[q] : r.marked_of[q];
      if (r.old_of[p] >= 0 && r.old_of[q] >= 0) leq[p][q] = l.leq(yp, yq);
      if (r.marked_of[p] >= 0 && r.marked_of[q] >= 0) leq[p][q] = l.leq(yp, yq);
      if (r.old_of[p] >= 0 && r.marked_of[q] >= 0) leq[p][q] = l.leq(yp, yq);
      // marked above old only, never below
    }

  r.lattice = SemiLattice::from_poset(Poset::from_relation(labels, leq));
  r.new_atom = marked_id[l.bottom()];
  return r;
}

bool verify_blowup_joins(const SemiLattice& l, int alpha, std::string* why) {
  BlowupResult bl = combinatorial_blowup(l, alpha);
  const int n = bl.lattice.size();

  std::vector<int> old_id(l.size(), -1), marked_id(l.size(), -1);
  for (int p = 0; p < n; ++p) {
    if (bl.old_of[p] >= 0) old_id[bl.old_of[p]] = p;
    if (bl.marked_of[p] >= 0) marked_id[bl.marked_of[p]] = p;
  }

  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      int yp = bl.old_of[p] >= 0 ? bl.old_of[p] : bl.marked_of[p];
      int yq = bl.old_of[q] >= 0 ? bl.old_of[q] : bl.marked_of[q];
      bool both_old = bl.old_of[p] >= 0 && bl.old_of[q] >= 0;

      // the formula names old(y v z) resp. [alpha, y v z]; the join exists
      // in the blowup exactly when that element does
      int expected = -1;
      auto u = l.join(yp, yq);
      if (u && !l.leq(alpha, *u)) {
        if (both_old)
          expected = old_id[*u];
        else if (l.join(*u, alpha))
          expected = marked_id[*u];
      }

      auto actual = bl.lattice.join(p, q);
      int actual_id = actual ? *actual : -1;
      if (actual_id != expected) {
        if (why)
          *why = "join of \"" + bl.lattice.label(p) + "\" and \"" +
                 bl.lattice.label(q) + "\" disagrees with the case formula";
        return false;
      }
    }
  return true;
}

BuildingTransfer transfer_building_set(const SemiLattice& l,
                                       const std::vector<int>& g, int alpha) {
  if (std::find(g.begin(), g.end(), alpha) == g.end())
    throw Error("AlphaNotMaximalInG", "blown-up element is not in the building set");
  for (int h : g)
    if (l.poset().less(alpha, h))
      throw Error("AlphaNotMaximalInG",
                  "\"" + l.label(h) + "\" lies strictly above \"" +
                      l.label(alpha) + "\"");

  BuildingTransfer t;
  t.blowup = combinatorial_blowup(l, alpha);

  std::vector<int> old_id(l.size(), -1);
  for (int p = 0; p < t.blowup.lattice.size(); ++p)
    if (t.blowup.old_of[p] >= 0) old_id[t.blowup.old_of[p]] = p;

  for (int m : g) {
    int image = m == alpha ? t.blowup.new_atom : old_id[m];
    if (image < 0)
      throw Error("InternalInconsistency", "building-set member vanished");
    t.member_map.emplace_back(m, image);
    t.transferred.members.push_back(image);
  }
  std::sort(t.transferred.members.begin(), t.transferred.members.end());

  if (!check_building_disjoint_necessity(t.blowup.lattice, t.transferred.members).ok)
    throw Error("InternalInconsistency",
                "transferred set failed building-set verification");
  t.transferred.validated_by = "disjoint-necessity";
  return t;
}

BlowupSequence blowup_sequence(const SemiLattice& l, const std::vector<int>& g,
                               const std::vector<int>& ordering) {
  if (!is_decreasing_extension(l.poset(), g, ordering))
    throw Error("NotDecreasingLinearExtension",
                "ordering must list larger building-set elements first");

  BlowupSequence seq;
  seq.lattice = l;
  for (int x = 0; x < l.size(); ++x)
    seq.labels.push_back(BlowupLabel::original(l.label(x)));

  for (size_t k = 0; k < ordering.size(); ++k) {
    auto id = seq.lattice.poset().index_of(l.label(ordering[k]));
    if (!id)
      throw Error("ElementVanished", "building-set element \"" +
                                         l.label(ordering[k]) +
                                         "\" missing at its turn");
    // remaining members must not lie above the one being blown
    for (size_t j = k + 1; j < ordering.size(); ++j) {
      auto later = seq.lattice.poset().index_of(l.label(ordering[j]));
      if (later && seq.lattice.poset().less(*id, *later))
        throw Error("InternalInconsistency",
                    "later building-set element above the current one");
    }
    BlowupResult step = combinatorial_blowup(seq.lattice, *id, &seq.labels);
    seq.atom_texts.push_back(step.lattice.label(step.new_atom));
    seq.lattice = std::move(step.lattice);
    seq.labels = std::move(step.labels);
  }
  return seq;
}

MainTheoremCheck verify_main_theorem(const SemiLattice& l,
                                     const std::vector<int>& g,
                                     const std::vector<int>& ordering) {
  MainTheoremCheck out;
  // the nested complex validates the building set before any blowup runs
  out.rhs = face_poset(nested_complex(l, g));
  BlowupSequence seq = blowup_sequence(l, g, ordering);
  out.lhs = seq.lattice;

  const std::string bottom_label = l.label(l.bottom());
  std::vector<int> atom_in_lhs(l.size(), -1);
  for (int m : g) {
    std::string text = "[" + l.label(m) + "," + bottom_label + "]";
    auto id = out.lhs.poset().index_of(text);
    if (!id) {
      out.detail = "expected atom \"" + text + "\" missing from the blowup";
      return out;
    }
    atom_in_lhs[m] = *id;
  }

  out.witness.map.assign(out.rhs.faces.size(), -1);
  for (size_t i = 0; i < out.rhs.faces.size(); ++i) {
    std::vector<int> atoms;
    for (int m : out.rhs.faces[i]) atoms.push_back(atom_in_lhs[m]);
    auto jn = out.lhs.join_of(atoms);
    if (!jn) {
      out.detail = "join of atoms missing for face " +
                   out.rhs.lattice.label(int(i));
      return out;
    }
    out.witness.map[i] = *jn;
  }

  if (!is_order_isomorphism(out.rhs.lattice.poset(), out.lhs.poset(),
                            out.witness)) {
    out.detail = "canonical face-to-join map is not an order isomorphism";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace semilat
