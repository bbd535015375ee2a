#include <ccrmu/corpus.hpp>
#include <ccrmu/syntax.hpp>

#include <array>

namespace ccrmu
{

namespace
{

constexpr std::array entries = {
  // propositional
  corpus_entry{ "true", true },
  corpus_entry{ "false", true },
  corpus_entry{ "p", true },
  corpus_entry{ "!p", true },
  corpus_entry{ "p | !p", true },
  // one cover level
  corpus_entry{ "nabla_a {}", true },
  corpus_entry{ "nabla_b {}", true },
  corpus_entry{ "nabla_a {true}", true },
  corpus_entry{ "nabla_b {true}", true },
  corpus_entry{ "nabla_a {p}", true },
  corpus_entry{ "nabla_b {p}", true },
  corpus_entry{ "nabla_a {!p, p}", true },
  corpus_entry{ "nabla_b {!p, p}", true },
  corpus_entry{ "nabla_a {!p}", true },
  corpus_entry{ "nabla_b {!p}", true },
  corpus_entry{ "p & nabla_a {p}", true },
  corpus_entry{ "!p & nabla_b {p}", true },
  corpus_entry{ "nabla_a {p} & nabla_b {!p}", true },
  corpus_entry{ "nabla_a {} & nabla_b {p}", true },
  corpus_entry{ "nabla_a {p, true}", true },
  corpus_entry{ "nabla_b {p, true}", true },
  corpus_entry{ "nabla_a {} | nabla_a {p}", true },
  corpus_entry{ "nabla_b {} | nabla_b {p}", true },
  corpus_entry{ "p & nabla_a {true} & nabla_b {true}", true },
  corpus_entry{ "nabla_a {p} | nabla_b {!p}", true },
  corpus_entry{ "(p & nabla_b {}) | (!p & nabla_a {true})", true },
  // two cover levels
  corpus_entry{ "nabla_a {nabla_b {p}}", true },
  corpus_entry{ "nabla_b {nabla_a {p}}", true },
  corpus_entry{ "nabla_a {nabla_a {}}", true },
  corpus_entry{ "nabla_b {nabla_b {true}}", true },
  corpus_entry{ "nabla_a {p & nabla_b {}, true}", true },
  corpus_entry{ "nabla_b {!p, nabla_a {true}}", true },
  corpus_entry{ "p & nabla_a {nabla_b {p, true}}", true },
  corpus_entry{ "nabla_a {nabla_a {p}, nabla_b {}}", true },
  corpus_entry{ "nabla_b {p & nabla_a {!p}}", true },
  corpus_entry{ "nabla_a {!p} & nabla_b {nabla_b {}}", true },
  corpus_entry{ "nabla_a {p | nabla_b {true}}", true },
  corpus_entry{ "nabla_b {nabla_a {} | nabla_b {p}}", true },
  // fixpoints in df shape
  corpus_entry{ "nu q. (p & nabla_a {q})", true },
  corpus_entry{ "nu q. nabla_a {q}", true },
  corpus_entry{ "nu q. (nabla_a {} | nabla_a {q})", true },
  corpus_entry{ "mu q. (p | nabla_a {q, true})", true },
  corpus_entry{ "mu q. (p | nabla_b {q})", true },
  corpus_entry{ "nu q. (!p & nabla_b {q, true})", true },
  corpus_entry{ "mu q. (p | nabla_a {q} | nabla_b {q})", true },
  corpus_entry{ "nu q. (nabla_a {q} & nabla_b {q})", true },
  corpus_entry{ "nabla_a {nu q. (p & nabla_a {q, true})}", true },
  corpus_entry{ "mu q. (!p | nabla_b {q, true})", true },
  corpus_entry{ "nu q. (p | nabla_b {q})", true },
  corpus_entry{ "nabla_b {mu q. (p | nabla_a {q, true})}", true },
  // outside the df fragment
  corpus_entry{ "[a]p", false },
  corpus_entry{ "<b>p", false },
  corpus_entry{ "<a>p & [a]!p", false },
  corpus_entry{ "<a>p & [a](p | <b>true)", false },
  corpus_entry{ "!nabla_a {!p, p}", false },
  corpus_entry{ "[b]<a>p", false },
  corpus_entry{ "<a>(p & [b]false) | [a][a]p", false },
  corpus_entry{ "!p -> <b>p", false },
  corpus_entry{ "nabla_a {p} & nabla_a {true}", false },
  corpus_entry{ "p & (nabla_a {} | nabla_a {p})", false },
  corpus_entry{ "mu q. (q & p)", false },
  corpus_entry{ "mu q. [a]q", false },
  corpus_entry{ "nu q. (p & [a]q)", false },
  corpus_entry{ "mu q. (p | <a>q & <b>true)", false },
  corpus_entry{ "nu q. mu r. (p & <a>q | <a>r)", false },
  corpus_entry{ "nu q. (nabla_a {q} & q)", false },
};

std::vector<formula> select( bool ( *keep )( const corpus_entry&, const formula& ) )
{
  std::vector<formula> out;
  for ( const auto& e : entries )
  {
    auto f = parse( e.text );
    if ( keep( e, f ) )
      out.push_back( std::move( f ) );
  }
  return out;
}

} // namespace

std::span<const corpus_entry> corpus() { return entries; }

std::vector<formula> df_corpus()
{
  return select( []( const corpus_entry& e, const formula& ) { return e.df; } );
}

std::vector<formula> fixpoint_free_corpus()
{
  return select( []( const corpus_entry&, const formula& f ) { return !has_fixpoint( f ); } );
}

std::vector<formula> fixpoint_corpus()
{
  return select( []( const corpus_entry&, const formula& f ) { return has_fixpoint( f ); } );
}

} // namespace ccrmu
