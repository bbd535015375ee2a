#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ccrmu
{

/// Fixed-universe bit set over the states `0 .. size()-1` of one model.
///
/// Universes of up to 64 states live in a single inline word; larger ones
/// spill to the heap. Iteration order is the model's state order.
class state_set
{
public:
  state_set() = default;

  explicit state_set( std::size_t universe, bool full = false )
    : _size( universe )
  {
    if ( universe > 64u )
    {
      _heap.assign( ( universe + 63u ) / 64u, full ? ~std::uint64_t{ 0 } : 0u );
    }
    else
    {
      _word = full ? ~std::uint64_t{ 0 } : 0u;
    }
    if ( full )
    {
      trim();
    }
  }

  static state_set full( std::size_t universe ) { return state_set( universe, true ); }

  std::size_t size() const noexcept { return _size; }

  bool test( std::size_t i ) const noexcept
  {
    assert( i < _size );
    return ( word( i / 64u ) >> ( i % 64u ) ) & 1u;
  }

  void set( std::size_t i ) noexcept
  {
    assert( i < _size );
    word( i / 64u ) |= std::uint64_t{ 1 } << ( i % 64u );
  }

  void reset( std::size_t i ) noexcept
  {
    assert( i < _size );
    word( i / 64u ) &= ~( std::uint64_t{ 1 } << ( i % 64u ) );
  }

  void assign( std::size_t i, bool value ) noexcept { value ? set( i ) : reset( i ); }

  bool any() const noexcept
  {
    for ( std::size_t w = 0; w < words(); ++w )
    {
      if ( word( w ) != 0u )
        return true;
    }
    return false;
  }

  bool none() const noexcept { return !any(); }

  std::size_t count() const noexcept
  {
    std::size_t n = 0;
    for ( std::size_t w = 0; w < words(); ++w )
      n += static_cast<std::size_t>( std::popcount( word( w ) ) );
    return n;
  }

  bool intersects( const state_set& other ) const noexcept
  {
    assert( _size == other._size );
    for ( std::size_t w = 0; w < words(); ++w )
    {
      if ( ( word( w ) & other.word( w ) ) != 0u )
        return true;
    }
    return false;
  }

  bool is_subset_of( const state_set& other ) const noexcept
  {
    assert( _size == other._size );
    for ( std::size_t w = 0; w < words(); ++w )
    {
      if ( ( word( w ) & ~other.word( w ) ) != 0u )
        return false;
    }
    return true;
  }

  state_set& operator|=( const state_set& other ) noexcept
  {
    assert( _size == other._size );
    for ( std::size_t w = 0; w < words(); ++w )
      word( w ) |= other.word( w );
    return *this;
  }

  state_set& operator&=( const state_set& other ) noexcept
  {
    assert( _size == other._size );
    for ( std::size_t w = 0; w < words(); ++w )
      word( w ) &= other.word( w );
    return *this;
  }

  /// Set difference.
  state_set& operator-=( const state_set& other ) noexcept
  {
    assert( _size == other._size );
    for ( std::size_t w = 0; w < words(); ++w )
      word( w ) &= ~other.word( w );
    return *this;
  }

  state_set complement() const
  {
    state_set r = *this;
    for ( std::size_t w = 0; w < r.words(); ++w )
      r.word( w ) = ~r.word( w );
    r.trim();
    return r;
  }

  friend state_set operator|( state_set a, const state_set& b ) { return a |= b; }
  friend state_set operator&( state_set a, const state_set& b ) { return a &= b; }
  friend state_set operator-( state_set a, const state_set& b ) { return a -= b; }

  friend bool operator==( const state_set& a, const state_set& b ) noexcept
  {
    if ( a._size != b._size )
      return false;
    for ( std::size_t w = 0; w < a.words(); ++w )
    {
      if ( a.word( w ) != b.word( w ) )
        return false;
    }
    return true;
  }

  /// Calls `fn(i)` for every member in increasing order.
  template<class Fn>
  void for_each( Fn&& fn ) const
  {
    for ( std::size_t w = 0; w < words(); ++w )
    {
      std::uint64_t bits = word( w );
      while ( bits != 0u )
      {
        const auto bit = static_cast<std::size_t>( std::countr_zero( bits ) );
        fn( w * 64u + bit );
        bits &= bits - 1u;
      }
    }
  }

  std::vector<std::size_t> members() const
  {
    std::vector<std::size_t> out;
    for_each( [&]( std::size_t i ) { out.push_back( i ); } );
    return out;
  }

  /// Lowest member, or `size()` when empty.
  std::size_t first() const noexcept
  {
    for ( std::size_t w = 0; w < words(); ++w )
    {
      if ( word( w ) != 0u )
        return w * 64u + static_cast<std::size_t>( std::countr_zero( word( w ) ) );
    }
    return _size;
  }

private:
  std::size_t words() const noexcept { return _size > 64u ? _heap.size() : 1u; }

  std::uint64_t word( std::size_t w ) const noexcept { return _size > 64u ? _heap[w] : _word; }
  std::uint64_t& word( std::size_t w ) noexcept { return _size > 64u ? _heap[w] : _word; }

  void trim() noexcept
  {
    const auto tail = _size % 64u;
    if ( _size == 0u )
    {
      _word = 0u;
    }
    else if ( tail != 0u )
    {
      word( words() - 1u ) &= ( std::uint64_t{ 1 } << tail ) - 1u;
    }
  }

  std::size_t _size = 0;
  std::uint64_t _word = 0;
  std::vector<std::uint64_t> _heap;
};

} // namespace ccrmu
