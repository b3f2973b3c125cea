// The differential-semantics corpus: formulas whose compiled automata are
// compared pointwise against the brute-force evaluator.  Every quantifier
// in these formulas is bounded by free variables or small constants, so
// bounded brute evaluation is exact on the tested assignment window.

#ifndef CTSEQ_TESTS_CORPUS_HPP
#define CTSEQ_TESTS_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ctseq/registry.hpp"
#include "ctseq/sequences.hpp"

#include "brute_eval.hpp"

namespace ctseq::testsupport {

struct CorpusEntry {
    std::string name;
    std::string defs;     // script of def commands, may be empty
    std::string formula;  // "?lsd_k ..."
    std::uint64_t free_bound = 200;       // assignments per free variable
    std::uint64_t quantifier_bound = 512; // brute quantifier range
};

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> kEntries = {
        // --- bodies of the embedded theorem scripts -------------------
        {"tm_blocks_body", "",
         "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) & T_lsd[i+n]!=T_lsd[i]"
         " & (i=0|T_lsd[i-1]!=T_lsd[i])"},
        {"tm_block_start_body",
         R"(def tm_blocks "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) &
             T_lsd[i+n]!=T_lsd[i] & (i=0|T_lsd[i-1]!=T_lsd[i])":)",
         "?lsd_2 i>=1 & ($tm_blocks(i,1)|$tm_blocks(i,2))"},
        {"even_mot_body",
         R"(def tm_blocks "?lsd_2 n>=1 & (At t<n => T_lsd[i+t]=T_lsd[i]) &
             T_lsd[i+n]!=T_lsd[i] & (i=0|T_lsd[i-1]!=T_lsd[i])":
            def tm_block_start "?lsd_2 i>=1 & ($tm_blocks(i,1)|$tm_blocks(i,2))":)",
         "?lsd_2 MOT2[n]=@0 <=> Ei $tm_block_start(i) & (n+2=4*i | n+1=4*i)"},
        {"mot5mod0", "", "?lsd_5 MOT5[n]=@0"},
        {"mot5_power_body", "",
         "?lsd_5 (n>=1) & At (t<=2*n) => MOT5[i+t]=MOT5[i+t+n]"},
        {"mot5faceq_body", "", "?lsd_5 At (t<n) => (MOT5[i+t]=MOT5[j+t])", 200,
         200},
        {"tri5faceq_body", "", "?lsd_5 At (t<n) => (TRI5[i+t]=TRI5[j+t])", 200,
         200},
        {"tri5_power_body", "",
         "?lsd_5 (n>=1) & At (t<2*n) => TRI5[i+t]=TRI5[i+t+n]"},
        {"pr_tri5_body_small", "",
         "?lsd_5 Ei i+n<=s & At t<n => TRI5[i+t]=TRI5[j+t]", 32, 40},
        {"tri5_no_zero_body", "", "?lsd_5 TRI5[n]=@0"},
        {"cat3max0_body", "",
         "?lsd_3 n>=1 & (At t<n => CAT3[i+t]=@0) & CAT3[i+n]!=@0 &"
         " (i=0|CAT3[i-1]!=@0)"},
        {"cat3max12_body", "",
         "?lsd_3 n>=1 & (At t<n => CAT3[i+t]!=@0) & CAT3[i+n]=@0 &"
         " (i=0|CAT3[i-1]=@0)"},
        {"cat3_111222_body",
         R"(def cat3max12 "?lsd_3 n>=1 & (At t<n => CAT3[i+t]!=@0) &
             CAT3[i+n]=@0 & (i=0|CAT3[i-1]=@0)":)",
         "?lsd_3 $cat3max12(i,6) & CAT3[i]=@1 & CAT3[i+1]=@1 & CAT3[i+2]=@1 &"
         " CAT3[i+3]=@2 & CAT3[i+4]=@2 & CAT3[i+5]=@2"},
        {"cat3all12_body",
         R"(def cat3max12 "?lsd_3 n>=1 & (At t<n => CAT3[i+t]!=@0) &
             CAT3[i+n]=@0 & (i=0|CAT3[i-1]=@0)":
            def cat3_111222 "?lsd_3 $cat3max12(i,6) & CAT3[i]=@1 &
             CAT3[i+1]=@1 & CAT3[i+2]=@1 & CAT3[i+3]=@2 & CAT3[i+4]=@2 &
             CAT3[i+5]=@2":
            def cat3_222111 "?lsd_3 $cat3max12(i,6) & CAT3[i]=@2 &
             CAT3[i+1]=@2 & CAT3[i+2]=@2 & CAT3[i+3]=@1 & CAT3[i+4]=@1 &
             CAT3[i+5]=@1":)",
         "?lsd_3 $cat3max12(i,n) => (i=0 | $cat3_111222(i) | $cat3_222111(i))"},
        {"cat5max0_body", "",
         "?lsd_5 n>=1 & (At t<n => CAT5[i+t]=@0) & CAT5[i+n]!=@0 &"
         " (i=0|CAT5[i-1]!=@0)"},
        {"cat5max1234_body", "",
         "?lsd_5 n>=1 & (At t<n => CAT5[i+t]!=@0) & CAT5[i+n]=@0 &"
         " (i=0|CAT5[i-1]=@0)"},

        // --- synthetic engine formulas --------------------------------
        {"vanishing_var", "", "?lsd_2 x=x"},
        {"strict_less", "", "?lsd_2 x<y"},
        {"sum_three", "", "?lsd_2 x+y=z"},
        {"double", "", "?lsd_2 2*x=y"},
        {"monus_shift", "", "?lsd_2 x-3=y"},
        {"monus_cancel", "", "?lsd_2 (x-5)+5=x"},
        {"monus_three", "", "?lsd_2 x-y=z"},
        {"antisym", "", "?lsd_3 (x<=y & y<=x) => x=y"},
        {"not_equal_via_not", "", "?lsd_2 ~(x=y)"},
        {"not_equal_direct", "", "?lsd_2 x!=y"},
        {"monus_ne_edge", "", "?lsd_2 x-1!=x+1"},
        {"even_witness", "", "?lsd_2 Et x=2*t"},
        {"bounded_forall", "", "?lsd_2 At t<x => t<10"},
        {"pair_split", "", "?lsd_2 Et,u (x=t+u & t=u)"},
        {"pred_or_zero", "", "?lsd_2 x=0|Ey y+1=x"},
        {"cat3_partition", "",
         "?lsd_3 CAT3[x]=@2 <=> ~(CAT3[x]=@0 | CAT3[x]=@1)"},
        {"tm_window", "", "?lsd_2 T_lsd[x]=T_lsd[x+1] => T_lsd[x]!=T_lsd[x+2]"},
        {"mot2_partition", "", "?lsd_2 MOT2[x]=@1 <=> ~(MOT2[x]=@0)"},
        {"half_thue", "", "?lsd_2 Ei (i<=x & T_lsd[i]=@1 & 2*i=x)"},
        {"mot5_period5", "", "?lsd_5 MOT5[x]=MOT5[x+5]"},
        {"mot5_vs_tri5", "", "?lsd_5 MOT5[x]!=TRI5[x]"},
        {"interval_or_point", "", "?lsd_5 (x>=3 & x<=7) | x=100"},
        {"mixed_le", "", "?lsd_3 x+2*y<=z+1"},
        {"eq_symmetric", "", "?lsd_2 (x=y) <=> (y=x)"},
        {"lt_negation", "", "?lsd_2 ~(x<y) <=> y<=x"},
        {"scaled_member", "", "?lsd_3 Em (x=3*m & CAT3[m]=@0)"},
        {"const_truth", "", "?lsd_2 1=1 & 2>1"},
        {"closed_false", "", "?lsd_2 En n=n+1"},
        {"seqpair_reflexive", "", "?lsd_5 At t<=3 => TRI5[x+t]=TRI5[x+t]"},
        {"call_chain",
         R"(def dbl "?lsd_2 y=2*x":)",
         "?lsd_2 $dbl(a,b) & $dbl(b,c)"},
        {"call_diagonal", R"(def dbl "?lsd_2 y=2*x":)", "?lsd_2 $dbl(z,z)"},
        {"call_permuted", R"(def flip "?lsd_2 b<a":)", "?lsd_2 $flip(x,y)"},
        {"call_with_terms", R"(def dbl "?lsd_2 y=2*x":)",
         "?lsd_2 $dbl(x+1,y-1)"},
        {"nested_quant", "", "?lsd_2 Ey (y<=x & Az z<y => z<x)"},
        {"iff_chain", "", "?lsd_2 (x=0 <=> y=0) <=> (y=0 <=> x=0)"},
        {"implies_right_assoc", "", "?lsd_2 x=0 => y=0 => x+y=0"},
    };
    return kEntries;
}

/// Oracle tables (never the DFAOs) for every built-in sequence name, sized
/// for every index the corpus can produce.
inline BruteWorld make_world(std::uint64_t quantifier_bound,
                             std::size_t table_size = 5000) {
    BruteWorld w;
    w.quantifier_bound = quantifier_bound;
    std::vector<std::uint8_t> tm(table_size);
    for (std::size_t n = 0; n < table_size; ++n)
        tm[n] = static_cast<std::uint8_t>(__builtin_popcountll(n) & 1);
    w.sequences.emplace("T_lsd", std::move(tm));
    for (const BuiltinSeq& b : builtin_sequences())
        w.sequences.emplace(b.name,
                            oracle_table(b.kind, table_size, b.p).values);
    return w;
}

}  // namespace ctseq::testsupport

#endif
