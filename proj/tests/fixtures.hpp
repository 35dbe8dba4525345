#pragma once

// Shared example networks: a small inheritance hierarchy and a
// scholarly-publishing network with authorship and citation slices.

#include "epl/network.hpp"

namespace fixtures {

// isA: journalist->writer, scholar->writer, writer->author,
// writer->person, all <1,0>.
inline epl::EvidenceNetwork inheritance_network() {
    epl::EvidenceNetwork net;
    const auto journalist = net.intern_vertex("journalist");
    const auto scholar = net.intern_vertex("scholar");
    const auto writer = net.intern_vertex("writer");
    const auto author = net.intern_vertex("author");
    const auto person = net.intern_vertex("person");
    net.assert_evidence(journalist, "isA", writer, {1, 0});
    net.assert_evidence(scholar, "isA", writer, {1, 0});
    net.assert_evidence(writer, "isA", author, {1, 0});
    net.assert_evidence(writer, "isA", person, {1, 0});
    return net;
}

// wrote: marko->this_article <4,4>, joe->this_article <5,4>,
// marko->path_article <2,2>; cites: this_article->path_article <2,3>,
// this_article->nars_article <3,5>. Tuple weights count the itemized
// pieces of evidence for and against each statement.
inline epl::EvidenceNetwork citation_network() {
    epl::EvidenceNetwork net;
    const auto marko = net.intern_vertex("marko");
    const auto joe = net.intern_vertex("joe");
    const auto this_article = net.intern_vertex("this_article");
    const auto path_article = net.intern_vertex("path_article");
    const auto nars_article = net.intern_vertex("nars_article");
    net.assert_evidence(marko, "wrote", this_article, {4, 4});
    net.assert_evidence(joe, "wrote", this_article, {5, 4});
    net.assert_evidence(marko, "wrote", path_article, {2, 2});
    net.assert_evidence(this_article, "cites", path_article, {2, 3});
    net.assert_evidence(this_article, "cites", nars_article, {3, 5});
    return net;
}

inline constexpr const char* kSelfCitationRule =
    "wrote <- (clip(wrote) . cites . T(wrote) & I) + wrote\n";

inline constexpr const char* kCoauthorRule =
    "coauthor <- ((wrote . T(wrote)) & not(I)) + coauthor\n";

}  // namespace fixtures
