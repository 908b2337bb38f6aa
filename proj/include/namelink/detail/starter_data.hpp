#ifndef NAMELINK_DETAIL_STARTER_DATA_HPP
#define NAMELINK_DETAIL_STARTER_DATA_HPP

// Small built-in resources used when no external file is configured. The
// formats are exactly the on-disk formats, so a full nickname dataset or a
// larger gender list can replace them without code changes.
namespace namelink::detail {

inline constexpr const char* kStarterDiminutives = R"(# canonical,diminutive,...
elizabeth,lizzy,lizzie,liz,eliza,lisa,libby,beth,betsy,betty,bess,bessie
catherine,kitty,kate,katie,cathy,kathy,kit
margaret,maggie,meg,peggy,madge,marge,daisy
mary,molly,polly,mae,mamie
jane,jenny,janie
anne,annie,nan,nancy,nanny
william,will,bill,billy,willy,willie,liam
robert,bob,bobby,rob,robbie,bert
richard,dick,rick,richie
charles,charlie,chuck,chas
edward,ed,eddie,ted,teddy,ned
james,jim,jimmy,jamie
john,jack,johnny
thomas,tom,tommy
henry,harry,hal,hank
george,georgie
frederick,fred,freddie,fritz
frances,fanny,fran
louisa,lou,lulu
lydia,liddy
georgiana,georgy,gigi
caroline,carrie,caddy
charlotte,lottie,lotte
joseph,joe,joey
benjamin,ben,benny
samuel,sam,sammy
daniel,dan,danny
alexander,alex,sandy,alec
christopher,chris,topher
michael,mike,mickey
patrick,pat,paddy
susan,sue,susie,suzy
rebecca,becky,becca
dorothy,dolly,dot,dottie
eleanor,nell,nellie,ellie
helen,lena
abigail,abby,gail
isabella,bella,izzy
victoria,vicky,tori
matthew,matt,matty
nicholas,nick,nicky
anthony,tony
peter,pete
andrew,andy,drew
stephen,steve,stevie
timothy,tim,timmy
aleksander,olek,olo
aleksandra,ola,olka
katarzyna,kasia,kaśka
małgorzata,gosia,małgosia
wojciech,wojtek
józef,józek,józio
łukasz,łukaszek
)";

inline constexpr const char* kStarterGenders = R"(# name<TAB>female|male|unknown
elizabeth	female
jane	female
mary	female
catherine	female
kitty	female
lydia	female
charlotte	female
caroline	female
georgiana	female
louisa	female
maria	female
anne	female
anna	female
margaret	female
frances	female
susan	female
rebecca	female
dorothy	female
eleanor	female
helen	female
abigail	female
isabella	female
victoria	female
emma	female
harriet	female
lucy	female
mina	female
marilla	female
diana	female
cathy	female
katarzyna	female
małgorzata	female
aleksandra	female
charles	male
george	male
william	male
fitzwilliam	male
edward	male
john	male
james	male
thomas	male
henry	male
robert	male
richard	male
frederick	male
joseph	male
benjamin	male
samuel	male
daniel	male
alexander	male
christopher	male
michael	male
patrick	male
matthew	male
nicholas	male
anthony	male
peter	male
andrew	male
stephen	male
timothy	male
jonathan	male
arthur	male
victor	male
heathcliff	male
edgar	male
hindley	male
dorian	male
basil	male
gilbert	male
huckleberry	male
tom	male
jim	male
jay	male
nick	male
łukasz	male
wojciech	male
aleksander	male
józef	male
andrzej	male
alex	unknown
chris	unknown
pat	unknown
sandy	unknown
jordan	unknown
)";

inline constexpr const char* kDefaultTitles = R"(Mr.	male
Mrs.	female
Ms.	female
Miss	female
)";

inline constexpr const char* kEnglishStopwords = R"(a
about
above
after
again
against
all
am
an
and
any
are
as
at
be
because
been
before
being
below
between
both
but
by
can
could
did
do
does
doing
down
during
each
even
ever
every
few
for
from
further
had
has
have
having
he
her
here
hers
herself
him
himself
his
how
i
if
in
into
is
it
its
itself
just
let
may
me
might
more
most
must
my
myself
no
nor
not
now
of
off
on
once
only
or
other
our
ours
ourselves
out
over
own
same
shall
she
should
so
some
such
than
that
the
their
theirs
them
themselves
then
there
these
they
this
those
through
to
too
under
until
up
upon
very
was
we
were
what
when
where
which
while
who
whom
why
will
with
would
yes
you
your
yours
yourself
yourselves
)";

}  // namespace namelink::detail

#endif  // NAMELINK_DETAIL_STARTER_DATA_HPP
