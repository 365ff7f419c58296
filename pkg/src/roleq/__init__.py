"""Role question generation toolkit.

Two-stage question generation for predicate/role pairs: context-independent
prototype questions per role (selected by QA consistency over a gold
argument corpus) and contextualization against a passage, backed by a
frame-aligned question corpus builder that grounds placeholder pronouns in
sibling answers.
"""

from .errors import (
    AlignmentError,
    BackendError,
    DataError,
    FormatError,
    GrammarError,
    ParseError,
    ProtocolError,
    RoleqError,
    VocabularyError,
)
from .framealign import (
    AlignedEntry,
    AlignedFrame,
    Fill,
    Frame,
    FrameEntry,
    build_frame_aligned,
    build_seq2seq_example,
    decapitalize,
    fill_question,
    fix_agreement,
    frame_from_dict,
    read_frames_jsonl,
    seq2seq_input,
)
from .grammar import (
    InflectionLexicon,
    SlotQuestion,
    TamvnSignature,
    VerbInflections,
    apply_tamvn,
    decompose_tamvn,
    inflect,
    load_default_lexicon,
    parse_slots,
    parse_surface,
    render,
    render_tokens,
)
from .pipeline import (
    BackendConnection,
    BackendQaOracle,
    ProcessBackend,
    RoleQuestionRequest,
    backend_call,
    contextualize,
    detect_tamvn,
    generate_role_questions,
    lookup_prototype,
)
from .prototypes import (
    ADJUNCT_ROLES,
    CORE_ROLES,
    CandidateTable,
    JointRecord,
    SrlArguments,
    aggregate_candidates,
    align_qa_to_srl,
    to_prototype,
)
from .readings import (
    DeclarativeReading,
    StructureKey,
    enumerate_readings,
    resolve_frame,
    resolve_reading,
    structure_key,
)
from .selection import (
    GoldInstance,
    LexiconEntry,
    QaOracle,
    RoleLexicon,
    build_and_filter_lexicon,
    read_gold_corpus,
    sample_arguments,
    select_prototype,
    span_iou,
    token_f1,
)

__version__ = "0.1.0"
