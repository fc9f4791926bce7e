#pragma once

#include <stdexcept>
#include <string>

namespace ringsynth
{

enum class error_kind
{
  divisibility,
  unitarity,
  parse,
  table_miss,
  internal_invariant,
  certificate
};

inline const char* to_string( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::divisibility:
    return "DIVISIBILITY-ERROR";
  case error_kind::unitarity:
    return "UNITARITY-ERROR";
  case error_kind::parse:
    return "PARSE-ERROR";
  case error_kind::table_miss:
    return "TABLE-MISS-ERROR";
  case error_kind::internal_invariant:
    return "INTERNAL-INVARIANT-ERROR";
  case error_kind::certificate:
    return "CERTIFICATE-ERROR";
  }
  return "ERROR";
}

/*! \brief Base class of every exception thrown by the library. */
class error : public std::runtime_error
{
public:
  error( error_kind kind, const std::string& what )
      : std::runtime_error( what ), kind_( kind )
  {
  }

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

struct divisibility_error : error
{
  explicit divisibility_error( const std::string& what ) : error( error_kind::divisibility, what ) {}
};

struct unitarity_error : error
{
  explicit unitarity_error( const std::string& what ) : error( error_kind::unitarity, what ) {}
};

struct parse_error : error
{
  explicit parse_error( const std::string& what ) : error( error_kind::parse, what ) {}
};

struct table_miss_error : error
{
  explicit table_miss_error( const std::string& what ) : error( error_kind::table_miss, what ) {}
};

struct internal_invariant_error : error
{
  explicit internal_invariant_error( const std::string& what ) : error( error_kind::internal_invariant, what ) {}
};

struct certificate_error : error
{
  explicit certificate_error( const std::string& what ) : error( error_kind::certificate, what ) {}
};

} // namespace ringsynth
