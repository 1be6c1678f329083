#include "vocab_data.hpp"

namespace aias::detail {

const std::string_view kVdi3682Ttl = R"ttl(@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix VDI3682: <https://w3id.org/aias/vdi3682#> .

# Technical process pattern: a process operator transforms input products
# into output products and is carried out by the technical resource it is
# assigned to.

VDI3682:ProcessOperator a owl:Class .
VDI3682:TechnicalResource a owl:Class .
VDI3682:Product a owl:Class .
VDI3682:Assignment a owl:Class .
VDI3682:Flow a owl:Class .
)ttl";

const std::string_view kIso7489Ttl = R"ttl(@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ISO7489: <https://w3id.org/aias/iso7489#> .

# Open-systems-interconnection communication pattern. A communication is
# described across the seven layers; a technology node is typed with the
# layer(s) it operates at and attached via usesTechnologyAtLayer.

ISO7489:Communication a owl:Class .

ISO7489:Layer a owl:Class .
ISO7489:Physical a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:DataLink a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:Network a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:Transport a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:Session a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:Presentation a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .
ISO7489:Application a owl:Class ;
    rdfs:subClassOf ISO7489:Layer .

ISO7489:usesTechnologyAtLayer a owl:ObjectProperty ;
    rdfs:domain ISO7489:Communication ;
    rdfs:range ISO7489:Layer .
)ttl";

const std::string_view kIso22989Ttl = R"ttl(@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix ISO22989: <https://w3id.org/aias/iso22989#> .

# AI concepts in three viewpoints: systems and functions, models and
# algorithms, data.

# Viewpoint 1: systems, designs, tasks, functions.
ISO22989:AISystem a owl:Class .

ISO22989:SystemDesign a owl:Class .
ISO22989:CloudDesign a owl:Class ;
    rdfs:subClassOf ISO22989:SystemDesign .
ISO22989:EdgeDesign a owl:Class ;
    rdfs:subClassOf ISO22989:SystemDesign .
ISO22989:HybridDesign a owl:Class ;
    rdfs:subClassOf ISO22989:SystemDesign .

ISO22989:Task a owl:Class .
ISO22989:Classification a owl:Class ;
    rdfs:subClassOf ISO22989:Task .
ISO22989:Clustering a owl:Class ;
    rdfs:subClassOf ISO22989:Task .
ISO22989:Regression a owl:Class ;
    rdfs:subClassOf ISO22989:Task .
ISO22989:Generation a owl:Class ;
    rdfs:subClassOf ISO22989:Task .

ISO22989:DataProcessing a owl:Class .
ISO22989:Training a owl:Class .
ISO22989:Validation a owl:Class .
ISO22989:Evaluation a owl:Class .
ISO22989:Inference a owl:Class .

# Viewpoint 2: models, algorithms, parameters.
ISO22989:MLModel a owl:Class .
ISO22989:MLAlgorithm a owl:Class .
ISO22989:LearningType a owl:Class .
ISO22989:ModelParameter a owl:Class .
ISO22989:Hyperparameter a owl:Class .

# Viewpoint 3: samples, data, datasets, sources and sinks.
ISO22989:Sample a owl:Class .
ISO22989:Data a owl:Class .
ISO22989:Dataset a owl:Class .
ISO22989:TrainingData a owl:Class ;
    rdfs:subClassOf ISO22989:Dataset .
ISO22989:EvaluationData a owl:Class ;
    rdfs:subClassOf ISO22989:Dataset .
ISO22989:ValidationData a owl:Class ;
    rdfs:subClassOf ISO22989:Dataset .
ISO22989:ProductionData a owl:Class ;
    rdfs:subClassOf ISO22989:Dataset .
ISO22989:TestData a owl:Class ;
    rdfs:subClassOf ISO22989:Dataset .
ISO22989:DataSource a owl:Class .
ISO22989:DataSink a owl:Class .
ISO22989:DataAcquisition a owl:Class .
ISO22989:DataStorage a owl:Class .

ISO22989:hasTask a owl:ObjectProperty ;
    rdfs:domain ISO22989:AISystem ;
    rdfs:range ISO22989:Task .
ISO22989:hasDesign a owl:ObjectProperty ;
    rdfs:domain ISO22989:AISystem ;
    rdfs:range ISO22989:SystemDesign .
ISO22989:produces a owl:ObjectProperty ;
    rdfs:domain ISO22989:Training ;
    rdfs:range ISO22989:MLModel .
ISO22989:usesModel a owl:ObjectProperty ;
    rdfs:domain ISO22989:Inference ;
    rdfs:range ISO22989:MLModel .
ISO22989:usesAlgorithm a owl:ObjectProperty ;
    rdfs:domain ISO22989:Training ;
    rdfs:range ISO22989:MLAlgorithm .
ISO22989:hasLearningType a owl:ObjectProperty ;
    rdfs:domain ISO22989:MLAlgorithm ;
    rdfs:range ISO22989:LearningType .
ISO22989:hasModelParameter a owl:ObjectProperty ;
    rdfs:domain ISO22989:MLModel ;
    rdfs:range ISO22989:ModelParameter .
ISO22989:hasHyperparameter a owl:ObjectProperty ;
    rdfs:domain ISO22989:MLModel ;
    rdfs:range ISO22989:Hyperparameter .
# Any function may consume datasets; the domain axiom lives in the
# alignment ontology.
ISO22989:usesData a owl:ObjectProperty ;
    rdfs:range ISO22989:Dataset .
ISO22989:acquiresFrom a owl:ObjectProperty ;
    rdfs:domain ISO22989:DataAcquisition ;
    rdfs:range ISO22989:DataSource .
ISO22989:storesTo a owl:ObjectProperty ;
    rdfs:domain ISO22989:DataStorage ;
    rdfs:range ISO22989:DataSink .
)ttl";

const std::string_view kAiasTtl = R"ttl(@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix AIAS: <https://w3id.org/aias#> .
@prefix VDI3682: <https://w3id.org/aias/vdi3682#> .
@prefix ISO7489: <https://w3id.org/aias/iso7489#> .
@prefix ISO22989: <https://w3id.org/aias/iso22989#> .
# Extension hooks: resource types can be equated with entries of richer
# product/service vocabularies by adding owl:equivalentClass statements
# under these namespaces. None are shipped.
@prefix eclass: <https://w3id.org/aias/ext/eclass#> .
@prefix unspsc: <https://w3id.org/aias/ext/unspsc#> .
@prefix ssn: <https://w3id.org/aias/ext/ssn#> .

# Core concepts.
AIAS:Function a owl:Class .
AIAS:Component a owl:Class .
AIAS:Relation a owl:Class .

# Components: resources execute the system's functions, products are
# transformed by its processes.
AIAS:Resource a owl:Class ;
    rdfs:subClassOf AIAS:Component ;
    owl:equivalentClass VDI3682:TechnicalResource .
AIAS:Product a owl:Class ;
    rdfs:subClassOf AIAS:Component ;
    owl:equivalentClass VDI3682:Product .

# Alias clarifying that a technical process is described by its operator.
AIAS:Process a owl:Class ;
    owl:equivalentClass VDI3682:ProcessOperator .

# Relations: assignment, communication, flow.
AIAS:Assignment a owl:Class ;
    rdfs:subClassOf AIAS:Relation ;
    owl:equivalentClass VDI3682:Assignment .
AIAS:Communication a owl:Class ;
    rdfs:subClassOf AIAS:Relation ;
    owl:equivalentClass ISO7489:Communication .
AIAS:Flow a owl:Class ;
    rdfs:subClassOf AIAS:Relation ;
    owl:equivalentClass VDI3682:Flow .

# The seven resource types.
AIAS:Sensor a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:Actuator a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:Controller a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:EdgeDevice a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:PersonalComputer a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:ComputerSystem a owl:Class ;
    rdfs:subClassOf AIAS:Resource .
AIAS:CloudSystem a owl:Class ;
    rdfs:subClassOf AIAS:Resource .

# Function types imported from the patterns.
VDI3682:ProcessOperator rdfs:subClassOf AIAS:Function .
ISO22989:DataProcessing rdfs:subClassOf AIAS:Function .
ISO22989:Training rdfs:subClassOf AIAS:Function .
ISO22989:Validation rdfs:subClassOf AIAS:Function .
ISO22989:Evaluation rdfs:subClassOf AIAS:Function .
ISO22989:Inference rdfs:subClassOf AIAS:Function .
ISO22989:DataAcquisition rdfs:subClassOf AIAS:Function .
ISO22989:DataStorage rdfs:subClassOf AIAS:Function .

# Relation properties.
AIAS:isAssignedTo a owl:ObjectProperty ;
    rdfs:range AIAS:Assignment .
AIAS:communicatesWith a owl:ObjectProperty ;
    rdfs:domain AIAS:Communication ;
    rdfs:range AIAS:Component .
# Flows connect products with the process transforming them, so the two
# flow properties carry no range axiom.
AIAS:flowsFrom a owl:ObjectProperty ;
    rdfs:domain AIAS:Flow .
AIAS:flowsTo a owl:ObjectProperty ;
    rdfs:domain AIAS:Flow .

# Functions of any pattern may consume datasets.
ISO22989:usesData rdfs:domain AIAS:Function .
)ttl";

}  // namespace aias::detail
